#pragma once

#include "folia/critical.hpp"
#include "folia/pullback.hpp"
#include "folia/solve.hpp"

#include <numeric>

namespace folia {

/// Invariant pair on the projective plane together with its parameter
/// relations and the side conditions that cannot be decided symbolically.
struct PlanePair {
    std::string family;
    ProjMap map;
    ProjForm form;
    ConstraintSet constraints;
    std::vector<std::string> side_conditions;
};

/// Invariant pair on the affine plane (toric or fibered families).
struct AffinePair {
    std::string family;
    AffineMap map;
    AffineForm form;
    ConstraintSet constraints;
    std::vector<std::string> side_conditions;
};

struct PlaneCaseParams {
    int d = 2;
    // case 1: the pencil map components
    std::optional<Poly> P, Q, R;
    // cases 4/5
    int p = 1, q = 2, delta = 0, l = 0;
    std::vector<Scalar> c;  // one entry per binomial factor; defaults c1, c2, ...
};

namespace detail {
inline Poly log_form_coeff_a(const Scalar& s) { return (poly_y() * poly_z()).scaled(s); }
inline ProjForm log_proj_form(const Scalar& a, const Scalar& b, const Scalar& c) {
    // a dx/x + b dy/y + c dz/z cleared by xyz, valid when a + b + c = 0
    return ProjForm((poly_y() * poly_z()).scaled(a), (poly_x() * poly_z()).scaled(b),
                    (poly_x() * poly_y()).scaled(c));
}
inline std::vector<Scalar> binomial_coefficients(int l, const std::vector<Scalar>& given) {
    std::vector<Scalar> out = given;
    for (int i = (int)out.size(); i < l; ++i)
        out.push_back(scalar_param("c" + std::to_string(i + 1)));
    out.resize((size_t)l);
    return out;
}
}  // namespace detail

/// The five families of holomorphic-map invariant foliations on the plane.
inline PlanePair make_plane_case(int case_id, const PlaneCaseParams& prm) {
    int d = prm.d;
    if (d < 2) throw Error("catalog: d >= 2 required");
    switch (case_id) {
        case 1: {
            Poly P = prm.P.value_or(Poly::variable(VarPool::X, d));
            Poly Q = prm.Q.value_or(Poly::variable(VarPool::Y, d));
            Poly R = prm.R.value_or(Poly::variable(VarPool::Z, d));
            if (P.contains_var(VarPool::Z) || Q.contains_var(VarPool::Z))
                throw Error("catalog case 1: P and Q must involve x, y only");
            int dp, dq, dr;
            if (!P.is_homogeneous(&dp) || !Q.is_homogeneous(&dq) || !R.is_homogeneous(&dr) ||
                dp != d || dq != d || dr != d)
                throw Error("catalog case 1: components must be homogeneous of degree d");
            ProjForm w(poly_y(), -poly_x(), Poly::zero());
            return PlanePair{"plane-1", ProjMap(P, Q, R), w, ConstraintSet(), {}};
        }
        case 2: {
            Scalar lam = scalar_param("lambda");
            ProjForm w = detail::log_proj_form(lam, scalar_int(1), -(lam + scalar_int(1)));
            ProjMap phi(Poly::variable(VarPool::X, d), Poly::variable(VarPool::Y, d),
                        Poly::variable(VarPool::Z, d));
            return PlanePair{"plane-2", phi, w, ConstraintSet(), {"lambda not rational"}};
        }
        case 3: {
            Scalar xi = scalar_param("xi");
            ProjForm w = detail::log_proj_form(xi, scalar_int(1), -(xi + scalar_int(1)));
            ProjMap phi(Poly::variable(VarPool::Z, d), Poly::variable(VarPool::X, d),
                        Poly::variable(VarPool::Y, d));
            ConstraintSet cs;
            cs.add(PPoly::variable(param("xi"), 2) + PPoly::variable(param("xi")) + PPoly::from_int(1));
            return PlanePair{"plane-3", phi, w, cs, {"xi is a primitive cube root of unity"}};
        }
        case 4: {
            int p = prm.p, q = prm.q, l = prm.l;
            if (p < 1 || q < 1) throw Error("catalog case 4: p, q >= 1 required");
            if (p == q) throw Error("p != q required");
            if (std::gcd(p, q) != 1) throw Error("catalog case 4: gcd(p, q) = 1 required");
            int delta = d - l * (p + q);
            if (l < 0 || delta < 0) throw Error("catalog case 4: d = delta + l*(p+q) needs delta >= 0");
            auto cs = detail::binomial_coefficients(l, prm.c);
            Poly R = Poly::variable(VarPool::Z, delta);
            for (auto& ci : cs)
                R = R * (Poly::variable(VarPool::Z, p + q) +
                         (Poly::variable(VarPool::X, p) * Poly::variable(VarPool::Y, q)).scaled(ci));
            ProjForm w = detail::log_proj_form(scalar_int(p), scalar_int(q), scalar_int(-(p + q)));
            ProjMap phi(Poly::variable(VarPool::X, d), Poly::variable(VarPool::Y, d), R);
            std::vector<std::string> side;
            for (size_t i = 0; i < cs.size(); ++i) side.push_back("c" + std::to_string(i + 1) + " nonzero");
            return PlanePair{"plane-4", phi, w, ConstraintSet(), side};
        }
        case 5: {
            int l = prm.l;
            int delta = d - 2 * l;
            if (l < 0 || delta < 0) throw Error("catalog case 5: d = delta + 2l needs delta >= 0");
            auto cs = detail::binomial_coefficients(l, prm.c);
            Poly R = Poly::variable(VarPool::Z, delta);
            for (auto& ci : cs)
                R = R * (Poly::variable(VarPool::Z, 2) +
                         (Poly::variable(VarPool::X) * Poly::variable(VarPool::Y)).scaled(ci));
            ProjForm w = detail::log_proj_form(scalar_int(1), scalar_int(1), scalar_int(-2));
            ProjMap phi(Poly::variable(VarPool::Y, d), Poly::variable(VarPool::X, d), R);
            std::vector<std::string> side;
            for (size_t i = 0; i < cs.size(); ++i) side.push_back("c" + std::to_string(i + 1) + " nonzero");
            return PlanePair{"plane-5", phi, w, ConstraintSet(), side};
        }
        default:
            throw Error("catalog: case must be 1..5");
    }
}

/// Monomial toric family: logarithmic form invariant under a monomial map
/// with diagonalizable exponent matrix of determinant at least 2.
inline AffinePair make_toric_log_pair(long long a, long long b, long long c, long long d,
                                      Scalar lambda = scalar_param("lambda"),
                                      Scalar mu = scalar_param("mu")) {
    long long det = a * d - b * c;
    if (det == 1 || det == -1 || det == 0) throw Error("determinant +-1 or 0 not allowed");
    long long tr = a + d;
    long long disc = tr * tr - 4 * det;
    bool scalar_mat = (b == 0 && c == 0 && a == d);
    if (disc == 0 && !scalar_mat) throw Error("exponent matrix not diagonalizable");
    AffineMap phi = AffineMap::monomial(a, b, c, d);
    AffineForm w = AffineForm::from_rational(RatFunc(Poly::constant(lambda), poly_x()),
                                             RatFunc(Poly::constant(mu), poly_y()));
    return AffinePair{"toric-log", phi, w, ConstraintSet(), {"lambda/mu not a positive rational"}};
}

/// Power-shear family: lambda dx/x + dy invariant under (x^k, k y).
inline AffinePair make_power_shear_pair(long long k, Scalar lambda = scalar_param("lambda")) {
    if (k == -1 || k == 0 || k == 1) throw Error("k in Z \\ {-1,0,1} required");
    AffineMap phi(RatFunc(poly_x()).pow((int)k), RatFunc(poly_y().scaled(scalar_int(k))));
    AffineForm w = AffineForm::from_rational(RatFunc(Poly::constant(lambda), poly_x()),
                                             RatFunc(poly_int(1)));
    return AffinePair{"power-shear", phi, w, ConstraintSet(), {"lambda nonzero"}};
}

/// Fibered power family: dy/y + m dx/((k-1)x) + mu x^n dx invariant under
/// (lambda x, x^m y^k) with lambda^(n+1) = k.
inline AffinePair make_riccati_power_pair(long long k, long long m, long long n,
                                          Scalar mu = scalar_param("mu")) {
    if (k == -1 || k == 0 || k == 1) throw Error("k in Z \\ {-1,0,1} required");
    if (n == -1) throw Error("n != -1 required");
    if (m == 0 && (n == -2 || n == 0)) throw Error("n not in {-2,-1,0} required when m = 0");
    if (mu.is_zero()) throw Error("mu nonzero required");
    Scalar lambda = scalar_param("lambda");
    AffineMap phi(RatFunc(poly_x().scaled(lambda)),
                  RatFunc(poly_x()).pow((int)m) * RatFunc(poly_y()).pow((int)k));
    RatFunc fx = RatFunc(Poly::constant(scalar_rat(Rational(m, k - 1))), poly_x()) +
                 RatFunc(poly_x()).pow((int)n) * RatFunc(Poly::constant(mu));
    RatFunc fy = RatFunc(poly_int(1), poly_y());
    AffineForm w = AffineForm::from_rational(fx, fy);
    ConstraintSet cs;
    VarId lv = param("lambda");
    if (n + 1 > 0)
        cs.add(PPoly::variable(lv, (int)(n + 1)) - PPoly::from_int(k));
    else
        cs.add(PPoly::variable(lv, (int)(-(n + 1))).scaled(Rational(k)) - PPoly::from_int(1));
    return AffinePair{"riccati-power", phi, w, cs, {"lambda not a root of unity"}};
}

/// k h(x) - lambda h(lambda x) - m/x, reduced modulo the constraints.
/// Zero certifies the invariance functional equation of the fibered family.
inline RatFunc riccati_scaling_residual(const RatFunc& h, const Scalar& k, const Scalar& lambda,
                                        const Scalar& m, const ConstraintSet& cs = ConstraintSet()) {
    for (const Poly* p : {&h.num(), &h.den()})
        if (p->contains_var(VarPool::Y) || p->contains_var(VarPool::Z))
            throw Error("riccati_scaling_residual: h must be univariate in x");
    if (h.den().term_count() > 1)
        throw Error("riccati_scaling_residual: h may have poles only at 0 and infinity");
    Poly lx = poly_x().scaled(lambda);
    RatFunc hl(h.num().substitute(VarPool::X, lx), h.den().substitute(VarPool::X, lx));
    RatFunc res = RatFunc(h.num().scaled(k), h.den()) - hl * RatFunc(Poly::constant(lambda)) -
                  RatFunc(Poly::constant(m), poly_x());
    return cs.reduce(res);
}

/// lambda h(lambda x) - c h(x), reduced; zero iff h is a monomial mu x^n
/// with c = lambda^(n+1).
inline RatFunc scaling_conjugation_residual(const RatFunc& h, const Scalar& lambda, const Scalar& c,
                                            const ConstraintSet& cs = ConstraintSet()) {
    Poly lx = poly_x().scaled(lambda);
    RatFunc hl(h.num().substitute(VarPool::X, lx), h.den().substitute(VarPool::X, lx));
    RatFunc res = hl * RatFunc(Poly::constant(lambda)) - h * RatFunc(Poly::constant(c));
    return cs.reduce(res);
}

/// Logarithmic foliations preserved by a monomial map: one per rational
/// eigenvector of the transposed exponent matrix; irrational eigenvalues
/// come as a conjugate pair through a quadratic-constraint parameter.
struct SecondFoliations {
    std::vector<AffineForm> forms;
    std::vector<Scalar> eigenvalues;  // the matching invariance cofactors
    ConstraintSet constraints;
    bool conjugate_pair = false;
    bool scalar_matrix = false;
    bool non_diagonalizable = false;
    std::vector<std::string> notes;
};

inline SecondFoliations second_foliations(long long a, long long b, long long c, long long d) {
    long long det = a * d - b * c;
    if (det == 1 || det == -1 || det == 0) throw Error("determinant +-1 or 0 not allowed");
    SecondFoliations out;
    auto log_form = [](const Scalar& alpha, const Scalar& beta) {
        return AffineForm((poly_y()).scaled(alpha), (poly_x()).scaled(beta), poly_x() * poly_y());
    };
    if (b == 0 && c == 0 && a == d) {
        out.scalar_matrix = true;
        out.notes.push_back("scalar exponent matrix: every logarithmic foliation is preserved");
        out.forms = {log_form(scalar_int(1), Scalar()), log_form(Scalar(), scalar_int(1))};
        out.eigenvalues = {scalar_int(a), scalar_int(a)};
        return out;
    }
    long long tr = a + d;
    long long disc = tr * tr - 4 * det;
    // eigenvector (alpha, beta) of the transpose [[a, c], [b, d]]
    auto eigenvector = [&](const Scalar& t) -> std::pair<Scalar, Scalar> {
        if (c != 0) return {scalar_int(c), t - scalar_int(a)};
        if (b != 0) return {t - scalar_int(d), scalar_int(b)};
        // diagonal: the axes are the eigenvectors
        if (t == scalar_int(a)) return {scalar_int(1), Scalar()};
        return {Scalar(), scalar_int(1)};
    };
    if (disc == 0) {
        out.non_diagonalizable = true;
        out.notes.push_back("non-diagonalizable exponent matrix: a single invariant foliation");
        Scalar t = scalar_rat(Rational(tr, 2));
        auto [al, be] = eigenvector(t);
        out.forms = {log_form(al, be)};
        out.eigenvalues = {t};
        return out;
    }
    Rational rdisc((long long)disc);
    Rational sq;
    if (rdisc.is_square(&sq)) {
        for (Rational t : {(Rational(tr) + sq) / Rational(2), (Rational(tr) - sq) / Rational(2)}) {
            auto [al, be] = eigenvector(scalar_rat(t));
            out.forms.push_back(log_form(al, be));
            out.eigenvalues.push_back(scalar_rat(t));
        }
        return out;
    }
    out.conjugate_pair = true;
    out.notes.push_back("irrational eigenvalues: conjugate pair through the characteristic constraint");
    Scalar t = scalar_param("tau");
    out.constraints.add(PPoly::variable(param("tau"), 2) - PPoly::variable(param("tau")).scaled(Rational(tr)) +
                        PPoly::from_int(det));
    auto [al, be] = eigenvector(t);
    out.forms = {log_form(out.constraints.reduce(al), out.constraints.reduce(be))};
    out.eigenvalues = {t};
    return out;
}

/// Result of matching a holomorphic invariant pair against the plane
/// catalog under coordinate permutations (diagonal rescalings are absorbed
/// by the template tests).
struct CertifyResult {
    bool matched = false;
    int case_id = 0;
    std::string permutation = "identity";
    int foliation_deg = -1;
    bool degree_bound_ok = false;
    std::vector<std::string> notes;
};

namespace detail {

struct Perm3 {
    std::array<int, 3> img;  // variable i maps to img[i]
    std::string name;
};

inline const std::vector<Perm3>& all_permutations() {
    static const std::vector<Perm3> perms = {
        {{0, 1, 2}, "identity"},   {{1, 0, 2}, "swap x,y"}, {{0, 2, 1}, "swap y,z"},
        {{2, 1, 0}, "swap x,z"},   {{1, 2, 0}, "cycle x->y->z"}, {{2, 0, 1}, "cycle x->z->y"}};
    return perms;
}

inline Poly permute_vars(const Poly& f, const Perm3& s) {
    const std::array<Poly, 3> vals = {poly_x(), poly_y(), poly_z()};
    return f.substitute({{VarPool::X, vals[(size_t)s.img[0]]},
                         {VarPool::Y, vals[(size_t)s.img[1]]},
                         {VarPool::Z, vals[(size_t)s.img[2]]}});
}

inline ProjMap conjugate_map(const ProjMap& phi, const Perm3& s) {
    // sigma^{-1} . phi . sigma, sigma(e_i) = e_{img[i]}
    std::array<Poly, 3> comp;
    for (int i = 0; i < 3; ++i) comp[(size_t)i] = permute_vars(phi.component(s.img[(size_t)i]), s);
    return ProjMap(comp[0], comp[1], comp[2]);
}

inline ProjForm permute_form(const ProjForm& w, const Perm3& s) {
    std::array<Poly, 3> comp;
    for (int i = 0; i < 3; ++i) comp[(size_t)i] = permute_vars(w.coeff(s.img[(size_t)i]), s);
    ProjForm out(comp[0], comp[1], comp[2]);
    out.canonicalize();
    return out;
}

/// Component is a nonzero scalar times v^d.
inline bool is_power_of(const Poly& f, VarId v, int d) {
    return f.term_count() == 1 && f.leading_monomial() == Monomial::var(v, d);
}

/// Logarithmic shape: a yz dx + b xz dy + c xy dz. Returns (a, b, c).
inline std::optional<std::array<Scalar, 3>> log_shape(const ProjForm& w) {
    std::array<Scalar, 3> abc = {Scalar(), Scalar(), Scalar()};
    const std::array<Monomial, 3> want = {Monomial::var(VarPool::Y) * Monomial::var(VarPool::Z),
                                          Monomial::var(VarPool::X) * Monomial::var(VarPool::Z),
                                          Monomial::var(VarPool::X) * Monomial::var(VarPool::Y)};
    for (int i = 0; i < 3; ++i) {
        const Poly& f = w.coeff(i);
        if (f.is_zero()) return std::nullopt;
        if (f.term_count() != 1 || !(f.leading_monomial() == want[(size_t)i])) return std::nullopt;
        abc[(size_t)i] = f.leading_coefficient();
    }
    return abc;
}

/// z^delta * product of (z^(p+q) + c_i x^p y^q) shape detection.
inline bool product_shape(const Poly& R, int p, int q, int* l_out, int* delta_out,
                          std::vector<Scalar>* coeffs) {
    DivisorFactorization f = factor_divisor(R);
    if (!f.complete) return false;
    int delta = 0, l = 0;
    Monomial mz = Monomial::var(VarPool::Z, p + q);
    Monomial mxy = Monomial::var(VarPool::X, p) * Monomial::var(VarPool::Y, q);
    for (auto& [comp, mult] : f.divisor.components()) {
        if (comp == poly_z()) { delta = mult; continue; }
        if (comp.term_count() != 2) return false;
        Scalar cz, cxy;
        for (auto& [m, co] : comp.terms()) {
            if (m == mz) cz = co;
            else if (m == mxy) cxy = co;
            else return false;
        }
        if (cz.is_zero() || cxy.is_zero()) return false;
        for (int i = 0; i < mult; ++i) coeffs->push_back(cxy / cz);
        l += mult;
    }
    *l_out = l;
    *delta_out = delta;
    return true;
}

}  // namespace detail

/// Matches an invariant holomorphic pair against the five plane families
/// under the monomial coordinate changes (permutations and diagonal
/// rescalings); a negative answer does not place the pair outside the
/// classification.
inline CertifyResult certify_plane_case(const ProjMap& phi, const ProjForm& w,
                                        const ConstraintSet& cs = ConstraintSet()) {
    if (phi.degree() < 2) throw Error("certify: map degree must be >= 2");
    HolomorphyReport hol = is_holomorphic(phi);
    if (hol.verdict == Holomorphy::NotHolomorphic) throw Error("certify: map has base points");
    CertifyResult out;
    if (hol.verdict == Holomorphy::Undecided) out.notes.push_back("holomorphy undecided (cap)");
    for (auto& n : hol.notes) out.notes.push_back("holomorphy: " + n);
    InvarianceReport inv = invariance_check(phi, w, cs);
    if (!inv.invariant) throw Error("certify: pair is not invariant");
    out.foliation_deg = foliation_degree(w);
    out.degree_bound_ok = out.foliation_deg <= 1;
    const int d = phi.degree();

    for (auto& s : detail::all_permutations()) {
        ProjMap ps = detail::conjugate_map(phi, s);
        ProjForm ws = detail::permute_form(w, s);
        // case 1: pencil of lines
        if (ws.canonical() == ProjForm(poly_y(), -poly_x(), Poly::zero()).canonical()) {
            if (!ps.p().contains_var(VarPool::Z) && !ps.q().contains_var(VarPool::Z)) {
                out.matched = true;
                out.case_id = 1;
                out.permutation = s.name;
                return out;
            }
        }
        auto abc = detail::log_shape(ws);
        if (!abc) continue;
        Scalar alpha = (*abc)[0], beta = (*abc)[1];
        bool diag = detail::is_power_of(ps.p(), VarPool::X, d) && detail::is_power_of(ps.q(), VarPool::Y, d) &&
                    detail::is_power_of(ps.r(), VarPool::Z, d);
        bool cyc = detail::is_power_of(ps.p(), VarPool::Z, d) && detail::is_power_of(ps.q(), VarPool::X, d) &&
                   detail::is_power_of(ps.r(), VarPool::Y, d);
        if (cyc) {
            // ratio must be a primitive cube root of unity modulo the constraints
            Scalar rel = alpha * alpha + alpha * beta + beta * beta;
            if (!cs.empty() && cs.is_zero_mod(rel)) {
                out.matched = true;
                out.case_id = 3;
                out.permutation = s.name;
                out.notes.push_back("coefficient ratio satisfies the cube-root relation");
                return out;
            }
            continue;
        }
        bool shape_xy = detail::is_power_of(ps.p(), VarPool::X, d) && detail::is_power_of(ps.q(), VarPool::Y, d);
        bool shape_yx = detail::is_power_of(ps.p(), VarPool::Y, d) && detail::is_power_of(ps.q(), VarPool::X, d);
        if (!shape_xy && !shape_yx) continue;
        // ratio of the logarithmic exponents
        Scalar ratio = alpha / beta;
        if (!parameter_free(ratio)) {
            if (diag) {
                out.matched = true;
                out.case_id = 2;
                out.permutation = s.name;
                out.notes.push_back("side condition: coefficient ratio must avoid Q");
                return out;
            }
            continue;
        }
        Rational r = rational_value(ratio);
        if (r.sign() <= 0) continue;  // another permutation puts the negative exponent last
        long long pn = r.num().to_ll(), qn = r.den().to_ll();
        if (pn == 1 && qn == 1) {
            // symmetric logarithmic form: product-of-conics family
            int l = 0, delta = 0;
            std::vector<Scalar> coefs;
            if (detail::product_shape(ps.r(), 1, 1, &l, &delta, &coefs) && delta + 2 * l == d &&
                (shape_yx || shape_xy)) {
                out.matched = true;
                out.case_id = 5;
                out.permutation = s.name;
                if (shape_xy) out.notes.push_back("unswapped variant of the symmetric family");
                return out;
            }
            continue;
        }
        if (shape_xy) {
            int l = 0, delta = 0;
            std::vector<Scalar> coefs;
            if (detail::product_shape(ps.r(), (int)pn, (int)qn, &l, &delta, &coefs) &&
                delta + l * (int)(pn + qn) == d) {
                out.matched = true;
                out.case_id = 4;
                out.permutation = s.name;
                return out;
            }
        }
    }
    out.notes.push_back("no match under monomial coordinate changes");
    return out;
}

/// Families that live on tori or elliptic fibrations; documented but not
/// constructible with the polynomial engine.
struct CatalogDocEntry {
    std::string family;
    std::string description;
};
inline std::vector<CatalogDocEntry> catalog_documentation() {
    return {
        {"torus-linear", "linear foliation on a torus C^2/Gamma with a linear diagonalizable map"},
        {"elliptic-suspension-mult",
         "ruled surface over an elliptic curve, monodromy in C*, form dy + lambda dx/x, map (x^k, ky)"},
        {"elliptic-suspension-add",
         "ruled surface over an elliptic curve, monodromy in C, form dy + lambda dx, map (zeta x + b, zeta y)"},
        {"turbulent-power",
         "P^1 x E turbulent family, form dy + x^n dx, map (lambda x, lambda^(n+1) y)"},
    };
}

/// Acceptance-grade grid of plane pairs: every case with d in {2, 3} and the
/// feasible (p, q, l) combinations, plus a deeper product-family instance.
inline std::vector<PlanePair> plane_catalog_grid() {
    std::vector<PlanePair> out;
    for (int d : {2, 3}) {
        out.push_back(make_plane_case(1, {.d = d}));
        out.push_back(make_plane_case(2, {.d = d}));
        out.push_back(make_plane_case(3, {.d = d}));
        for (auto [p, q] : {std::pair<int, int>{1, 2}, {2, 3}}) {
            for (int l : {0, 1}) {
                if (d - l * (p + q) < 0) continue;
                PlaneCaseParams prm;
                prm.d = d;
                prm.p = p;
                prm.q = q;
                prm.l = l;
                out.push_back(make_plane_case(4, prm));
            }
        }
        for (int l : {0, 1}) {
            if (d - 2 * l < 0) continue;
            PlaneCaseParams prm;
            prm.d = d;
            prm.l = l;
            out.push_back(make_plane_case(5, prm));
        }
    }
    {
        PlaneCaseParams prm;  // deeper instance: (p, q) = (2, 3) with one factor
        prm.d = 5;
        prm.p = 2;
        prm.q = 3;
        prm.l = 1;
        out.push_back(make_plane_case(4, prm));
    }
    return out;
}

}  // namespace folia
