#include "folia/catalog.hpp"
#include "folia/parse.hpp"

#include <catch2/catch.hpp>

using namespace folia;

TEST_CASE("plane case constructors match the printed normal forms") {
    EvalEnv env({"lambda", "xi", "c", "c1"});
    SECTION("diagonal power family") {
        PlanePair pp = make_plane_case(2, {.d = 2});
        REQUIRE(pp.map.str() == "[x^2 : y^2 : z^2]");
        REQUIRE(pp.form == parse_proj_form("lambda*y*z*dx + x*z*dy - (1+lambda)*x*y*dz", env));
    }
    SECTION("product family instance") {
        PlaneCaseParams prm;
        prm.d = 3;
        prm.p = 1;
        prm.q = 2;
        prm.l = 1;
        prm.c = {scalar_param("c")};
        PlanePair pp = make_plane_case(4, prm);
        REQUIRE(pp.form == parse_proj_form("y*z*dx + 2*x*z*dy - 3*x*y*dz", env));
        REQUIRE(pp.map.r() == parse_poly("z^3 + c*x*y^2", env));
    }
    SECTION("parameter conditions are validated") {
        PlaneCaseParams bad;
        bad.d = 2;
        bad.p = 1;
        bad.q = 1;
        bad.l = 0;
        REQUIRE_THROWS_WITH(make_plane_case(4, bad), Catch::Contains("p != q"));
        PlaneCaseParams badgcd;
        badgcd.d = 2;
        badgcd.p = 2;
        badgcd.q = 4;
        REQUIRE_THROWS_WITH(make_plane_case(4, badgcd), Catch::Contains("gcd"));
        PlaneCaseParams badl;
        badl.d = 2;
        badl.p = 1;
        badl.q = 2;
        badl.l = 1;
        REQUIRE_THROWS_WITH(make_plane_case(4, badl), Catch::Contains("delta"));
        REQUIRE_THROWS_WITH(make_plane_case(2, {.d = 1}), Catch::Contains("d >= 2"));
    }
}

TEST_CASE("every grid pair is invariant with the expected cofactor shape") {
    for (auto& pp : plane_catalog_grid()) {
        InvarianceReport rep = invariance_check(pp.map, pp.form, pp.constraints);
        INFO(pp.family << " d=" << pp.map.degree());
        REQUIRE(rep.invariant);
        REQUIRE(rep.cofactor.has_value());
    }
}

TEST_CASE("toric logarithmic pairs") {
    SECTION("symmetric matrix with unit parameters") {
        AffinePair pp = make_toric_log_pair(2, 1, 1, 2, scalar_int(1), scalar_int(1));
        AffineInvarianceReport rep = affine_invariance_check(pp.map, pp.form, pp.constraints);
        REQUIRE(rep.invariant);
        REQUIRE(*rep.cofactor == RatFunc(poly_int(3)));
    }
    SECTION("diagonal matrix with generic parameters is not invariant") {
        AffinePair pp = make_toric_log_pair(2, 0, 0, 3);
        AffineInvarianceReport rep = affine_invariance_check(pp.map, pp.form, pp.constraints);
        REQUIRE_FALSE(rep.invariant);
    }
    SECTION("diagonal matrix with an eigenvector form is invariant") {
        AffineMap phi = AffineMap::monomial(2, 0, 0, 3);
        AffineForm w = AffineForm::from_rational(RatFunc(poly_int(1), poly_x()), RatFunc());
        AffineInvarianceReport rep = affine_invariance_check(phi, w);
        REQUIRE(rep.invariant);
        REQUIRE(*rep.cofactor == RatFunc(poly_int(2)));
    }
    SECTION("unit determinant rejected") {
        REQUIRE_THROWS_WITH(make_toric_log_pair(1, 1, 0, 1), Catch::Contains("determinant"));
    }
    SECTION("non-diagonalizable rejected") {
        REQUIRE_THROWS_WITH(make_toric_log_pair(2, 0, 1, 2), Catch::Contains("diagonalizable"));
    }
}

TEST_CASE("power-shear family") {
    AffinePair pp = make_power_shear_pair(3);
    AffineInvarianceReport rep = affine_invariance_check(pp.map, pp.form, pp.constraints);
    REQUIRE(rep.invariant);
    REQUIRE(*rep.cofactor == RatFunc(poly_int(3)));
    REQUIRE_THROWS(make_power_shear_pair(1));
}

TEST_CASE("fibered power family validation and invariance") {
    SECTION("k=2 m=1 n=1 is invariant with cofactor 2") {
        AffinePair pp = make_riccati_power_pair(2, 1, 1, scalar_int(1));
        AffineInvarianceReport rep = affine_invariance_check(pp.map, pp.form, pp.constraints);
        REQUIRE(rep.invariant);
        REQUIRE(*rep.cofactor == RatFunc(poly_int(2)));
    }
    SECTION("negative n goes through the inverted constraint") {
        AffinePair pp = make_riccati_power_pair(2, 1, -3, scalar_int(1));
        AffineInvarianceReport rep = affine_invariance_check(pp.map, pp.form, pp.constraints);
        REQUIRE(rep.invariant);
        REQUIRE(*rep.cofactor == RatFunc(poly_int(2)));
    }
    SECTION("excluded parameters") {
        REQUIRE_THROWS_WITH(make_riccati_power_pair(2, 0, 0, scalar_int(1)), Catch::Contains("n not in"));
        REQUIRE_THROWS_WITH(make_riccati_power_pair(1, 1, 1, scalar_int(1)), Catch::Contains("k in Z"));
        REQUIRE_THROWS_WITH(make_riccati_power_pair(2, 1, -1, scalar_int(1)), Catch::Contains("n != -1"));
        REQUIRE_THROWS_WITH(make_riccati_power_pair(2, 0, -2, scalar_int(1)), Catch::Contains("n not in"));
        REQUIRE_THROWS_WITH(make_riccati_power_pair(2, 1, 1, Scalar()), Catch::Contains("mu"));
    }
}

TEST_CASE("scaling functional equation residuals") {
    EvalEnv env({"lambda", "mu", "k"});
    SECTION("normal-form coefficient function solves the equation") {
        // h = m/((k-1)x) + mu x^n with n=1, k=2, m=1
        RatFunc h = parse_ratfunc("1/x + mu*x", env);
        ConstraintSet cs;
        cs.add(parse_constraint("lambda^2 - 2", env));
        RatFunc res = riccati_scaling_residual(h, scalar_int(2), scalar_param("lambda"), scalar_int(1), cs);
        REQUIRE(res.is_zero());
    }
    SECTION("constant h leaves residual 1") {
        RatFunc h = parse_ratfunc("1", env);
        RatFunc res = riccati_scaling_residual(h, scalar_int(2), scalar_int(1), scalar_int(0));
        REQUIRE(res == RatFunc(poly_int(1)));
    }
    SECTION("monomial without constraint carries the defect") {
        RatFunc h = parse_ratfunc("mu*x", env);
        RatFunc res = riccati_scaling_residual(h, scalar_param("k"), scalar_param("lambda"), scalar_int(0));
        // residual mu (k - lambda^2) x
        RatFunc expect = parse_ratfunc("mu*(k - lambda^2)*x", env);
        REQUIRE(res == expect);
    }
    SECTION("poles beyond 0 and infinity rejected") {
        RatFunc h = parse_ratfunc("1/(x+1)", env);
        REQUIRE_THROWS(riccati_scaling_residual(h, scalar_int(2), scalar_int(1), scalar_int(0)));
    }
}

TEST_CASE("scale conjugation residuals") {
    EvalEnv env({"lambda", "c"});
    SECTION("monomials scale exactly") {
        RatFunc h = parse_ratfunc("x^2", env);
        ConstraintSet cs;
        cs.add(parse_constraint("c - lambda^3", env));
        RatFunc res = scaling_conjugation_residual(h, scalar_param("lambda"), scalar_param("c"), cs);
        REQUIRE(res.is_zero());
    }
    SECTION("non-monomials fail with an explicit residual") {
        RatFunc h = parse_ratfunc("x + x^2", env);
        RatFunc res = scaling_conjugation_residual(h, scalar_int(2), scalar_int(4));
        REQUIRE(res == parse_ratfunc("4*x^2", env));
        // substitution oracle at x = 1: 2 h(2) - 4 h(1) = 2*6 - 4*2 = 4
        REQUIRE(res.num().evaluate({{VarPool::X, scalar_int(1)}, {VarPool::Y, Scalar()}}) == scalar_int(4));
    }
    SECTION("zero function") {
        REQUIRE(scaling_conjugation_residual(RatFunc(), scalar_int(2), scalar_int(4)).is_zero());
    }
}

TEST_CASE("second foliations of monomial maps") {
    EvalEnv env;
    SECTION("symmetric matrix: both eigenvector forms") {
        SecondFoliations sf = second_foliations(2, 1, 1, 2);
        REQUIRE(sf.forms.size() == 2);
        REQUIRE_FALSE(sf.conjugate_pair);
        AffineMap phi = AffineMap::monomial(2, 1, 1, 2);
        for (size_t i = 0; i < sf.forms.size(); ++i) {
            AffineInvarianceReport rep = affine_invariance_check(phi, sf.forms[i]);
            REQUIRE(rep.invariant);
            REQUIRE(*rep.cofactor == RatFunc(Poly::constant(sf.eigenvalues[i])));
        }
    }
    SECTION("diagonal matrix: axis forms with their multipliers") {
        SecondFoliations sf = second_foliations(2, 0, 0, 3);
        REQUIRE(sf.forms.size() == 2);
        AffineMap phi = AffineMap::monomial(2, 0, 0, 3);
        for (size_t i = 0; i < sf.forms.size(); ++i) {
            AffineInvarianceReport rep = affine_invariance_check(phi, sf.forms[i]);
            REQUIRE(rep.invariant);
            REQUIRE(*rep.cofactor == RatFunc(Poly::constant(sf.eigenvalues[i])));
        }
    }
    SECTION("scalar matrix flag") {
        SecondFoliations sf = second_foliations(2, 0, 0, 2);
        REQUIRE(sf.scalar_matrix);
        REQUIRE(sf.forms.size() == 2);
    }
    SECTION("irrational eigenvalues through the quadratic constraint") {
        SecondFoliations sf = second_foliations(1, 1, 1, -1);
        REQUIRE(sf.conjugate_pair);
        REQUIRE(sf.forms.size() == 1);
        AffineMap phi = AffineMap::monomial(1, 1, 1, -1);
        AffineInvarianceReport rep = affine_invariance_check(phi, sf.forms[0], sf.constraints);
        REQUIRE(rep.invariant);
        REQUIRE(*rep.cofactor == RatFunc(Poly::constant(sf.eigenvalues[0])));
    }
    SECTION("non-diagonalizable matrix: one foliation, flagged") {
        SecondFoliations sf = second_foliations(2, 0, 1, 2);
        REQUIRE(sf.non_diagonalizable);
        REQUIRE(sf.forms.size() == 1);
        // the invariant foliation is dx/x (x = cst)
        REQUIRE(sf.forms[0].a() == poly_int(1));
        REQUIRE(sf.forms[0].b().is_zero());
        REQUIRE(sf.forms[0].den() == parse_poly("x"));
        AffineMap phi = AffineMap::monomial(2, 0, 1, 2);
        AffineInvarianceReport rep = affine_invariance_check(phi, sf.forms[0]);
        REQUIRE(rep.invariant);
        REQUIRE(*rep.cofactor == RatFunc(poly_int(2)));
    }
    SECTION("determinant guard") {
        REQUIRE_THROWS(second_foliations(1, 0, 0, 1));
    }
}

TEST_CASE("holomorphy of catalog and degenerate maps") {
    EvalEnv env({"c"});
    REQUIRE(is_holomorphic(ProjMap(parse_poly("x^2"), parse_poly("y^2"), parse_poly("z^2"))).verdict ==
            Holomorphy::Holomorphic);
    HolomorphyReport bad = is_holomorphic(ProjMap(parse_poly("x^2"), parse_poly("x*y"), parse_poly("z^2")));
    REQUIRE(bad.verdict == Holomorphy::NotHolomorphic);
    REQUIRE(bad.base_point.has_value());
    REQUIRE(*bad.base_point == ProjPoint::of(0, 1, 0));
    REQUIRE(is_holomorphic(ProjMap::identity()).verdict == Holomorphy::Holomorphic);
    // parameter family: generic verdict
    ProjMap phi(parse_poly("x^3", env), parse_poly("y^3", env), parse_poly("z^3 + c*x*y^2", env));
    HolomorphyReport rep = is_holomorphic(phi);
    REQUIRE(rep.verdict == Holomorphy::Holomorphic);
    REQUIRE_FALSE(rep.notes.empty());
    // base point with irrational coordinates
    ProjMap irr(parse_poly("x^2 - 2*z^2"), parse_poly("y^2"), parse_poly("x*y"));
    REQUIRE(is_holomorphic(irr).verdict == Holomorphy::NotHolomorphic);
}

TEST_CASE("certification of invariant pairs") {
    EvalEnv env({"lambda", "xi", "c"});
    SECTION("diagonal power pair lands in the diagonal family") {
        PlanePair pp = make_plane_case(2, {.d = 2});
        CertifyResult res = certify_plane_case(pp.map, pp.form, pp.constraints);
        REQUIRE(res.matched);
        REQUIRE(res.case_id == 2);
        REQUIRE(res.degree_bound_ok);
    }
    SECTION("cyclic pair lands in the cube-root family") {
        PlanePair pp = make_plane_case(3, {.d = 2});
        CertifyResult res = certify_plane_case(pp.map, pp.form, pp.constraints);
        REQUIRE(res.matched);
        REQUIRE(res.case_id == 3);
    }
    SECTION("swapped product pair with p = q = 1") {
        // [y^3 : x^3 : z(z^2 + c x y)] with the symmetric logarithmic form
        PlaneCaseParams prm;
        prm.d = 3;
        prm.l = 1;
        prm.c = {scalar_param("c")};
        PlanePair pp = make_plane_case(5, prm);
        CertifyResult res = certify_plane_case(pp.map, pp.form, pp.constraints);
        REQUIRE(res.matched);
        REQUIRE(res.case_id == 5);
    }
    SECTION("pencil pair lands in case 1") {
        PlanePair pp = make_plane_case(1, {.d = 2});
        CertifyResult res = certify_plane_case(pp.map, pp.form, pp.constraints);
        REQUIRE(res.matched);
        REQUIRE(res.case_id == 1);
    }
    SECTION("product family with (p, q) = (1, 2)") {
        PlaneCaseParams prm;
        prm.d = 3;
        prm.p = 1;
        prm.q = 2;
        prm.l = 1;
        PlanePair pp = make_plane_case(4, prm);
        CertifyResult res = certify_plane_case(pp.map, pp.form, pp.constraints);
        REQUIRE(res.matched);
        REQUIRE(res.case_id == 4);
    }
    SECTION("permuted coordinates are found") {
        // conjugate the cube-root pair by the swap of y and z
        EvalEnv env2({"xi"});
        ConstraintSet cs;
        cs.add(parse_constraint("xi^2 + xi + 1", env2));
        ProjForm w = parse_proj_form("xi*y*z*dx - (1+xi)*x*z*dy + x*y*dz", env2);
        ProjMap phi(parse_poly("y^2"), parse_poly("z^2"), parse_poly("x^2"));
        CertifyResult res = certify_plane_case(phi, w, cs);
        REQUIRE(res.matched);
        REQUIRE(res.case_id == 3);
        REQUIRE(res.permutation != "identity");
    }
    SECTION("precondition failures throw") {
        PlanePair pp = make_plane_case(2, {.d = 2});
        ProjMap bad(parse_poly("x^2"), parse_poly("x*y"), parse_poly("z^2"));
        REQUIRE_THROWS_WITH(certify_plane_case(bad, pp.form), Catch::Contains("base points"));
        ProjForm notinv = parse_proj_form("x*z*dx - y*z*dy - (x^2 - y^2)*dz", EvalEnv());
        REQUIRE_THROWS_WITH(certify_plane_case(pp.map, notinv), Catch::Contains("not invariant"));
    }
}

TEST_CASE("documentation entries for the non-polynomial families") {
    auto docs = catalog_documentation();
    REQUIRE(docs.size() == 4);
    for (auto& d : docs) REQUIRE_FALSE(d.description.empty());
}
