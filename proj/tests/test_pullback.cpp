#include "folia/parse.hpp"
#include "folia/pullback.hpp"

#include <catch2/catch.hpp>
#include <random>

using namespace folia;

namespace {
EvalEnv env_lc() { return EvalEnv({"lambda", "mu", "c"}); }

ProjMap power_map(int d) {
    return ProjMap(Poly::variable(VarPool::X, d), Poly::variable(VarPool::Y, d),
                   Poly::variable(VarPool::Z, d));
}

/// Random Euler form of coefficient degree k via the Koszul presentation
/// (A, B, C) = (b z - c y, c x - a z, a y - b x).
ProjForm random_euler_form(std::mt19937_64& rng, int k) {
    for (;;) {
        Poly abc[3];
        for (auto& p : abc) {
            for (int t = 0; t < 3; ++t) {
                int i = (int)(rng() % (unsigned)k), j = (int)(rng() % (unsigned)(k - i));
                Monomial m = Monomial::var(VarPool::X, i) * Monomial::var(VarPool::Y, j) *
                             Monomial::var(VarPool::Z, k - 1 - i - j);
                p.add_term(m, scalar_int((long long)(rng() % 19) - 9));
            }
        }
        Poly A = abc[1] * poly_z() - abc[2] * poly_y();
        Poly B = abc[2] * poly_x() - abc[0] * poly_z();
        Poly C = abc[0] * poly_y() - abc[1] * poly_x();
        if (A.is_zero() && B.is_zero() && C.is_zero()) continue;
        auto cs = content_and_primitive({A, B, C});
        if (cs.primitives[0].total_degree() != k) continue;  // keep the stated degree
        ProjForm w(cs.primitives[0], cs.primitives[1], cs.primitives[2]);
        w.canonicalize();
        return w;
    }
}

ProjMap random_map(std::mt19937_64& rng, int d) {
    for (;;) {
        Poly c[3];
        for (auto& p : c) {
            for (int t = 0; t < 3; ++t) {
                int i = (int)(rng() % (unsigned)(d + 1)), j = (int)(rng() % (unsigned)(d + 1 - i));
                Monomial m = Monomial::var(VarPool::X, i) * Monomial::var(VarPool::Y, j) *
                             Monomial::var(VarPool::Z, d - i - j);
                p.add_term(m, scalar_int((long long)(rng() % 9) - 4));
            }
        }
        try {
            return ProjMap(c[0], c[1], c[2]);
        } catch (const Error&) {
            continue;  // degenerate draw
        }
    }
}
}  // namespace

TEST_CASE("pullback of the logarithmic form under the power map") {
    EvalEnv env = env_lc();
    ProjForm w = parse_proj_form("lambda*y*z*dx + x*z*dy - (1+lambda)*x*y*dz", env);
    PullbackResult pb = pullback_form(power_map(2), w);
    REQUIRE(pb.primitive.canonical() == w.canonical());
    REQUIRE(pb.content == parse_poly("2*x*y*z", env));
    REQUIRE(pullback_degree_identity(power_map(2), w, pb));
}

TEST_CASE("pullback under the identity is trivial") {
    EvalEnv env = env_lc();
    ProjForm w = parse_proj_form("lambda*y*z*dx + x*z*dy - (1+lambda)*x*y*dz", env);
    PullbackResult pb = pullback_form(ProjMap::identity(), w);
    REQUIRE(pb.primitive.canonical() == w.canonical());
    REQUIRE(pb.content.is_constant());
}

TEST_CASE("pullback of the line pencil under the power map") {
    EvalEnv env = env_lc();
    ProjForm w = parse_proj_form("y*dx - x*dy", env);
    PullbackResult pb = pullback_form(power_map(2), w);
    REQUIRE(pb.primitive.canonical() == w.canonical());
    REQUIRE(pb.content == parse_poly("2*x*y", env));
    REQUIRE(pullback_degree_identity(power_map(2), w, pb));
}

TEST_CASE("raw pullback satisfies the Euler relation and the degree identity") {
    std::mt19937_64 rng(777111);
    for (int i = 0; i < 6; ++i) {
        ProjForm w = random_euler_form(rng, 2);
        ProjMap phi = random_map(rng, 2);
        auto raw = pullback_raw(phi, w);
        REQUIRE((poly_x() * raw[0] + poly_y() * raw[1] + poly_z() * raw[2]).is_zero());
        PullbackResult pb = pullback_form(phi, w);
        REQUIRE(pullback_degree_identity(phi, w, pb));
        Poly recon[3];
        for (int k = 0; k < 3; ++k) REQUIRE(pb.content * pb.primitive.coeff(k) == raw[k]);
    }
}

TEST_CASE("invariance of the product-family pair") {
    EvalEnv env = env_lc();
    ProjForm w = parse_proj_form("y*z*dx + 2*x*z*dy - 3*x*y*dz", env);
    ProjMap phi(parse_poly("x^3", env), parse_poly("y^3", env), parse_poly("z^3 + c*x*y^2", env));
    InvarianceReport rep = invariance_check(phi, w);
    REQUIRE(rep.invariant);
    REQUIRE(rep.cofactor.has_value());
    REQUIRE(*rep.cofactor == parse_poly("3*x^2*y^2*z^2", env));
    // defining identity of the cofactor
    auto raw = pullback_raw(phi, w);
    for (int k = 0; k < 3; ++k) REQUIRE(raw[k] == *rep.cofactor * w.coeff(k));
}

TEST_CASE("random Euler forms are not invariant under the power map") {
    ProjMap phi = power_map(2);
    std::mt19937_64 rng(424242);
    int invariant_count = 0;
    for (int i = 0; i < 25; ++i) {
        ProjForm w = random_euler_form(rng, 2);
        InvarianceReport rep = invariance_check(phi, w);
        if (rep.invariant) {
            ++invariant_count;  // would need the logarithmic shape; not expected
        } else {
            bool some_nonzero = false;
            for (auto& r : rep.residual) some_nonzero = some_nonzero || !r.is_zero();
            REQUIRE(some_nonzero);
        }
    }
    REQUIRE(invariant_count == 0);
}

TEST_CASE("identity map invariance with cofactor one") {
    EvalEnv env = env_lc();
    ProjForm w = parse_proj_form("y*z*dx + 2*x*z*dy - 3*x*y*dz", env);
    InvarianceReport rep = invariance_check(ProjMap::identity(), w);
    REQUIRE(rep.invariant);
    REQUIRE(rep.cofactor.has_value());
    REQUIRE(*rep.cofactor == poly_int(1));
}

TEST_CASE("affine invariance: fibered power family instance") {
    EvalEnv env = env_lc();
    // k = 2, m = 1, n = 1: (lambda x, x y^2) preserves dy/y + dx/x + mu x dx
    AffineMap phi(parse_ratfunc("lambda*x", env), parse_ratfunc("x*y^2", env));
    AffineForm w = parse_affine_form("dy/y + dx/x + mu*x*dx", env);
    ConstraintSet cs;
    cs.add(parse_constraint("lambda^2 - 2", env));
    AffineInvarianceReport rep = affine_invariance_check(phi, w, cs);
    REQUIRE(rep.invariant);
    REQUIRE(rep.cofactor.has_value());
    REQUIRE(*rep.cofactor == RatFunc(poly_int(2)));
    // without the constraint the residual survives
    AffineInvarianceReport rep2 = affine_invariance_check(phi, w);
    REQUIRE_FALSE(rep2.invariant);
    REQUIRE_FALSE(rep2.residual.is_zero());
}

TEST_CASE("affine invariance: symmetric monomial map") {
    EvalEnv env = env_lc();
    AffineMap phi = AffineMap::monomial(2, 1, 1, 2);
    AffineForm w = parse_affine_form("dx/x + dy/y", env);
    AffineInvarianceReport rep = affine_invariance_check(phi, w);
    REQUIRE(rep.invariant);
    REQUIRE(*rep.cofactor == RatFunc(poly_int(3)));
}

TEST_CASE("affine invariance: translation breaks scaling forms") {
    EvalEnv env = env_lc();
    AffineMap phi(parse_ratfunc("x + 1", env), parse_ratfunc("2*y", env));
    AffineForm w = parse_affine_form("dy/y + x*dx", env);
    AffineInvarianceReport rep = affine_invariance_check(phi, w);
    REQUIRE_FALSE(rep.invariant);
    REQUIRE_FALSE(rep.residual.is_zero());
}

TEST_CASE("pullback functoriality on random pairs") {
    std::mt19937_64 rng(13579);
    for (int i = 0; i < 4; ++i) {
        ProjMap phi = random_map(rng, 2), psi = random_map(rng, 2);
        ProjForm w = random_euler_form(rng, 2);
        ProjForm lhs = pullback_foliation(psi, pullback_foliation(phi, w));
        ProjForm rhs = pullback_foliation(ProjMap::compose(phi, psi), w);
        REQUIRE(same_foliation(lhs, rhs));
    }
}
