#pragma once

#include "folia/plane.hpp"

namespace folia {

/// Raw coefficients of phi^* w (chain rule, no normalization).
inline std::array<Poly, 3> pullback_raw(const ProjMap& phi, const ProjForm& w) {
    Poly ap = phi.pull(w.a()), bp = phi.pull(w.b()), cp = phi.pull(w.c());
    std::array<Poly, 3> raw;
    const std::array<VarId, 3> vars = {VarPool::X, VarPool::Y, VarPool::Z};
    for (int i = 0; i < 3; ++i) {
        VarId v = vars[i];
        raw[i] = ap * phi.p().derivative(v) + bp * phi.q().derivative(v) + cp * phi.r().derivative(v);
    }
    return raw;
}

/// content * primitive == raw substituted coefficients, exactly.
struct PullbackResult {
    ProjForm primitive;
    Poly content;
};

inline PullbackResult pullback_form(const ProjMap& phi, const ProjForm& w) {
    if (!w.is_primitive()) throw Error("pullback_form: reduce first");
    auto raw = pullback_raw(phi, w);
    if (raw[0].is_zero() && raw[1].is_zero() && raw[2].is_zero())
        throw Error("pullback_form: zero pullback (map not dominant)");
    auto cs = content_and_primitive({raw[0], raw[1], raw[2]});
    ProjForm prim(cs.primitives[0], cs.primitives[1], cs.primitives[2]);
    Scalar u = prim.canonicalize();
    return PullbackResult{prim, cs.content.scaled(u)};
}

inline ProjForm pullback_foliation(const ProjMap& phi, const ProjForm& w) {
    return pullback_form(phi, w).primitive;
}

/// Exact degree bookkeeping: deg(content) + coeff-degree(primitive)
/// always equals d*(e+1) + (d-1) where d = deg(map), e = foliation degree.
inline bool pullback_degree_identity(const ProjMap& phi, const ProjForm& w,
                                     const PullbackResult& pb) {
    int d = phi.degree(), e = foliation_degree(w);
    int lhs = (pb.content.is_constant() ? 0 : pb.content.total_degree()) + pb.primitive.coeff_degree();
    return lhs == d * (e + 1) + (d - 1);
}

struct InvarianceReport {
    bool invariant = false;
    std::optional<Poly> cofactor;     // b with phi^* w = b * w modulo the constraints
    std::array<Poly, 3> residual;     // reduced wedge coefficients (zero iff invariant)
    PullbackResult pullback;
    std::vector<std::string> flags;
};

/// Proportionality test between the primitive pullback and w: the wedge
/// (a 2-form) must vanish identically modulo the declared constraints.
inline InvarianceReport invariance_check(const ProjMap& phi, const ProjForm& w,
                                         const ConstraintSet& cs = ConstraintSet()) {
    InvarianceReport rep{false, std::nullopt, {}, pullback_form(phi, w), {}};
    auto wedge = rep.pullback.primitive.wedge(w);
    bool inv = true;
    for (int i = 0; i < 3; ++i) {
        rep.residual[i] = cs.reduce(wedge[i]);
        inv = inv && rep.residual[i].is_zero();
    }
    rep.invariant = inv;
    if (!inv) return rep;
    // recover the unit u with primitive = u * w modulo constraints
    std::array<Poly, 3> pr, wr;
    for (int i = 0; i < 3; ++i) {
        pr[i] = cs.reduce(rep.pullback.primitive.coeff(i));
        wr[i] = cs.reduce(w.coeff(i));
    }
    std::optional<Scalar> unit;
    for (int i = 0; i < 3 && !unit; ++i) {
        if (wr[i].is_zero()) continue;
        Scalar cand = pr[i].leading_coefficient() / wr[i].leading_coefficient();
        bool ok = true;
        for (int j = 0; j < 3 && ok; ++j) ok = cs.is_zero_mod(pr[j] - wr[j].scaled(cand));
        if (ok) unit = cand;
    }
    if (!unit) {
        rep.flags.push_back("cofactor-not-recovered");
        return rep;
    }
    rep.cofactor = cs.reduce(rep.pullback.content.scaled(*unit));
    return rep;
}

/// Components of phi^* w on C^2 as exact rational functions.
inline std::array<RatFunc, 2> affine_pullback_components(const AffineMap& phi, const AffineForm& w) {
    RatFunc a = phi.pull(w.dx_coeff()), b = phi.pull(w.dy_coeff());
    std::array<RatFunc, 2> out;
    out[0] = a * AffineMap::df(phi.f1(), VarPool::X) + b * AffineMap::df(phi.f2(), VarPool::X);
    out[1] = a * AffineMap::df(phi.f1(), VarPool::Y) + b * AffineMap::df(phi.f2(), VarPool::Y);
    return out;
}

struct AffineInvarianceReport {
    bool invariant = false;
    std::optional<RatFunc> cofactor;  // meromorphic cofactor, reduced
    Poly residual;                    // reduced wedge numerator
    std::optional<AffineForm> pullback;
    std::vector<std::string> flags;
};

inline AffineInvarianceReport affine_invariance_check(const AffineMap& phi, const AffineForm& w,
                                                      const ConstraintSet& cs = ConstraintSet()) {
    AffineInvarianceReport rep;
    auto pb = affine_pullback_components(phi, w);
    if (pb[0].is_zero() && pb[1].is_zero()) throw Error("affine pullback vanished");
    rep.pullback = AffineForm::from_rational(pb[0], pb[1]);
    RatFunc wedge = pb[0] * w.dy_coeff() - pb[1] * w.dx_coeff();
    rep.residual = cs.reduce(wedge.num());
    rep.invariant = rep.residual.is_zero();
    if (!rep.invariant) return rep;
    const RatFunc& wx = w.dx_coeff();
    const RatFunc& wy = w.dy_coeff();
    RatFunc b = !wx.is_zero() ? pb[0] / wx : pb[1] / wy;
    b = cs.reduce(b);
    bool ok = cs.is_zero_mod(pb[0] - b * wx) && cs.is_zero_mod(pb[1] - b * wy);
    if (!ok) {
        rep.flags.push_back("cofactor-not-recovered");
        return rep;
    }
    rep.cofactor = b;
    return rep;
}

/// Equality of foliations defined by primitive forms: canonical
/// representatives coincide (both are unique up to the extracted unit).
inline bool same_foliation(const ProjForm& w1, const ProjForm& w2) {
    return w1.canonical() == w2.canonical();
}

}  // namespace folia
