#pragma once

#include "folia/divisor.hpp"
#include "folia/local.hpp"
#include "folia/pullback.hpp"

namespace folia {

/// Determinant of the differential; homogeneous of degree 3(d-1).
inline Poly jacobian_determinant(const ProjMap& phi) {
    Poly j = phi.jacobian();
    if (j.is_zero()) throw Error("map not dominant");
    return j;
}

/// Divisor of the Jacobian determinant.
inline DivisorFactorization critical_divisor(const ProjMap& phi, int degree_cap = 6) {
    return factor_divisor(jacobian_determinant(phi), degree_cap);
}

/// Algebraic invariance of the curve {E = 0}: E divides every coefficient
/// of w ∧ dE.
inline bool curve_invariance(const ProjForm& w, const Poly& E) {
    if (E.is_constant()) throw Error("curve_invariance: constant curve");
    int d;
    if (!E.is_homogeneous(&d)) throw Error("curve_invariance: inhomogeneous curve");
    Poly ex = E.derivative(VarPool::X), ey = E.derivative(VarPool::Y), ez = E.derivative(VarPool::Z);
    Poly w_xy = w.a() * ey - w.b() * ex;
    Poly w_xz = w.a() * ez - w.c() * ex;
    Poly w_yz = w.b() * ez - w.c() * ey;
    return E.divides(w_xy) && E.divides(w_xz) && E.divides(w_yz);
}

/// True iff phi maps the curve {E = 0} to a single point: every tangent
/// direction along E is killed projectively. Tested with the three
/// Hamiltonian-type fields tangent to E.
inline bool contracts_curve(const ProjMap& phi, const Poly& E) {
    Poly ex = E.derivative(VarPool::X), ey = E.derivative(VarPool::Y), ez = E.derivative(VarPool::Z);
    struct Field { Poly cx, cy, cz; };
    std::vector<Field> fields = {{ey, -ex, Poly::zero()}, {ez, Poly::zero(), -ex}, {Poly::zero(), ez, -ey}};
    const Poly &P = phi.p(), &Q = phi.q(), &R = phi.r();
    for (auto& f : fields) {
        auto apply = [&](const Poly& g) {
            return f.cx * g.derivative(VarPool::X) + f.cy * g.derivative(VarPool::Y) +
                   f.cz * g.derivative(VarPool::Z);
        };
        Poly vp = apply(P), vq = apply(Q), vr = apply(R);
        if (!E.divides(vp * Q - vq * P)) return false;
        if (!E.divides(vp * R - vr * P)) return false;
        if (!E.divides(vq * R - vr * Q)) return false;
    }
    return true;
}

/// Some rational point on the curve {E = 0}, looked for on the coordinate
/// lines. Enough for every line and for the coordinate-degenerate curves
/// that appear in critical divisors at desk scale.
inline std::optional<ProjPoint> rational_point_on(const Poly& E) {
    if (!parameter_free(E)) return std::nullopt;
    const std::array<ProjPoint, 3> corners = {ProjPoint::of(1, 0, 0), ProjPoint::of(0, 1, 0),
                                              ProjPoint::of(0, 0, 1)};
    auto eval = [&](const ProjPoint& p) {
        std::map<VarId, Scalar> vals = {{VarPool::X, scalar_rat(p.h[0])},
                                        {VarPool::Y, scalar_rat(p.h[1])},
                                        {VarPool::Z, scalar_rat(p.h[2])}};
        return E.evaluate(vals);
    };
    for (auto& c : corners)
        if (eval(c).is_zero()) return c;
    // intersect with each coordinate line
    struct Slice { VarId zeroed, v1, v2; };
    for (auto& s : {Slice{VarPool::Z, VarPool::X, VarPool::Y}, Slice{VarPool::Y, VarPool::X, VarPool::Z},
                    Slice{VarPool::X, VarPool::Y, VarPool::Z}}) {
        Poly r = E.substitute(s.zeroed, Poly::zero());
        if (r.is_zero()) continue;
        Poly dehom = r.substitute(s.v2, poly_int(1));
        if (dehom.is_constant()) continue;
        UniPoly u = to_unipoly(dehom, s.v1);
        if (u.degree() < 1) continue;
        RootSearch rs = rational_roots(u);
        if (rs.roots.empty()) continue;
        Rational coords[3] = {Rational(0), Rational(0), Rational(0)};
        auto idx = [](VarId v) { return v == VarPool::X ? 0 : v == VarPool::Y ? 1 : 2; };
        coords[idx(s.v1)] = rs.roots.front();
        coords[idx(s.v2)] = Rational(1);
        return ProjPoint::of(coords[0], coords[1], coords[2]);
    }
    return std::nullopt;
}

struct ComponentCheck {
    Poly component;
    int ord_critical = 0;
    int ord_difference = 0;
    bool invariant = false;
    bool contracted = false;
    bool hypothesis_verified = true;
    bool ok = true;
    std::string status;
};

/// Divisor bookkeeping for a pullback: content divisor D0, critical divisor,
/// their difference D, the exact degree identity, and the per-component
/// order checks split by invariance of the component.
struct PullbackDivisorReport {
    Divisor content_divisor;   // D0
    Divisor critical_divisor;  // divisor of the Jacobian
    Divisor difference;        // D = critical - D0
    bool factorization_complete = true;
    int map_degree = 0;
    int target_degree = 0;  // e  = deg of the given foliation
    int source_degree = 0;  // e' = deg of its pullback
    bool degree_identity = false;
    bool effective = false;
    std::vector<ComponentCheck> components;
    std::vector<std::string> flags;
    bool all_ok = true;
};

inline PullbackDivisorReport divisor_identity_report(const ProjMap& phi, const ProjForm& w,
                                                     const ConstraintSet& cs = ConstraintSet(),
                                                     int degree_cap = 6) {
    PullbackDivisorReport rep;
    PullbackResult pb = pullback_form(phi, w);
    DivisorFactorization d0 = factor_divisor(pb.content, degree_cap);
    DivisorFactorization delta = factor_divisor(jacobian_determinant(phi), degree_cap);
    rep.factorization_complete = d0.complete && delta.complete;
    if (!rep.factorization_complete) rep.flags.push_back("factorization cap exceeded; partial result");
    for (auto& [f, m] : d0.unsplit) rep.flags.push_back("unsplit content factor: " + f.str());
    for (auto& [f, m] : delta.unsplit) rep.flags.push_back("unsplit critical factor: " + f.str());
    rep.content_divisor = d0.divisor;
    rep.critical_divisor = delta.divisor;
    rep.difference = delta.divisor - d0.divisor;
    rep.map_degree = phi.degree();
    rep.target_degree = foliation_degree(w);
    rep.source_degree = foliation_degree(pb.primitive);
    int expect = (rep.source_degree - 1) - rep.map_degree * (rep.target_degree - 1);
    rep.degree_identity = rep.difference.degree() == expect;
    rep.effective = rep.difference.effective();
    if (!rep.degree_identity) rep.all_ok = false;

    for (auto& [E, mult] : rep.critical_divisor.components()) {
        ComponentCheck c;
        c.component = E;
        c.ord_critical = mult;
        c.ord_difference = rep.difference.ord(E);
        c.invariant = curve_invariance(pb.primitive, E);
        c.contracted = contracts_curve(phi, E);
        if (!c.invariant) {
            if (c.contracted) {
                c.hypothesis_verified = false;
                c.status = "transverse and contracted: reduced-singularity hypothesis unverified";
                rep.flags.push_back(c.status + " for " + E.str());
            } else {
                c.ok = c.ord_difference == c.ord_critical;
                c.status = c.ok ? "transverse: ord(D) = ord(critical)"
                                : "VIOLATION: transverse component with ord(D) != ord(critical)";
            }
        } else if (!c.contracted) {
            c.ok = c.ord_difference >= 0;
            c.status = c.ok ? "invariant: ord(D) >= 0" : "VIOLATION: invariant component with ord(D) < 0";
        } else {
            // contracted invariant component: the inequality needs the image to
            // be a reduced singularity of the target foliation
            c.hypothesis_verified = false;
            c.status = "hypothesis unverified";
            auto pt = rational_point_on(E);
            if (pt) {
                std::map<VarId, Scalar> vals = {{VarPool::X, scalar_rat(pt->h[0])},
                                                {VarPool::Y, scalar_rat(pt->h[1])},
                                                {VarPool::Z, scalar_rat(pt->h[2])}};
                Scalar pv = phi.p().evaluate(vals), qv = phi.q().evaluate(vals), rv = phi.r().evaluate(vals);
                if (parameter_free(pv) && parameter_free(qv) && parameter_free(rv) &&
                    !(pv.is_zero() && qv.is_zero() && rv.is_zero())) {
                    ProjPoint image = ProjPoint::of(rational_value(pv), rational_value(qv), rational_value(rv));
                    try {
                        LocalModel lm = LocalModel::at(w, image);
                        if (!lm.is_singular()) {
                            c.hypothesis_verified = true;
                            c.status = "image is a regular point";
                        } else {
                            ReducedReport rr = is_reduced(lm, cs);
                            if (rr.verdict == ReducedVerdict::Reduced) {
                                c.hypothesis_verified = true;
                                c.status = "image is a reduced singularity";
                            } else if (rr.verdict == ReducedVerdict::NotReduced) {
                                c.status = "image singularity not reduced: inequality not asserted";
                            } else {
                                c.status = "image singularity undecidable symbolically";
                            }
                        }
                    } catch (const Error& e) {
                        c.status = std::string("image check failed: ") + e.what();
                    }
                }
            }
            if (c.hypothesis_verified) {
                c.ok = c.ord_difference >= 0;
                if (!c.ok) c.status += "; VIOLATION: ord(D) < 0";
            } else {
                rep.flags.push_back("hypothesis unverified for contracted component " + E.str());
            }
        }
        if (!c.ok) rep.all_ok = false;
        rep.components.push_back(std::move(c));
    }
    return rep;
}

struct DegreeBoundReport {
    bool bound_holds = false;
    int foliation_deg = -1;
    std::string note;
};

/// Bound check: a holomorphic-degree >= 2 invariant pair forces foliation
/// degree <= 1; a violation pinpoints a bug or a failed hypothesis.
inline DegreeBoundReport degree_bound_check(const ProjMap& phi, const ProjForm& w,
                                            const ConstraintSet& cs = ConstraintSet()) {
    if (phi.degree() < 2) throw Error("degree_bound_check: map degree must be >= 2");
    InvarianceReport inv = invariance_check(phi, w, cs);
    if (!inv.invariant) throw Error("degree_bound_check: pair is not invariant");
    DegreeBoundReport rep;
    rep.foliation_deg = foliation_degree(w);
    rep.bound_holds = rep.foliation_deg <= 1;
    rep.note = rep.bound_holds ? "degree bound holds"
                               : "degree bound violated: bug or hypothesis failure "
                                 "(contracted curve onto a non-reduced singularity)";
    return rep;
}

}  // namespace folia
