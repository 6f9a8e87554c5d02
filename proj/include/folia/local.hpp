#pragma once

#include "folia/factor.hpp"
#include "folia/plane.hpp"

#include <functional>

namespace folia {

struct AffinePoint {
    Rational x, y;
    std::string str() const { return "(" + x.str() + ", " + y.str() + ")"; }
};

/// Germ of a foliation at a point of C^2, translated to the origin and
/// stored by its primitive defining pair A dx + B dy.
class LocalModel {
public:
    static LocalModel at(const AffineForm& w, const AffinePoint& p) {
        auto [a, b] = w.primitive_pair();
        std::map<VarId, Poly> shift = {
            {VarPool::X, poly_x() + Poly::constant(scalar_rat(p.x))},
            {VarPool::Y, poly_y() + Poly::constant(scalar_rat(p.y))}};
        return LocalModel(a.substitute(shift), b.substitute(shift));
    }
    static LocalModel at_origin(const AffineForm& w) {
        auto [a, b] = w.primitive_pair();
        return LocalModel(std::move(a), std::move(b));
    }
    /// Germ at a projective point: restrict to a chart containing it.
    static LocalModel at(const ProjForm& w, const ProjPoint& p);

    LocalModel(Poly a, Poly b) : a_(std::move(a)), b_(std::move(b)) {
        if (a_.is_zero() && b_.is_zero()) throw Error("LocalModel: zero form");
        Poly g = Poly::gcd(a_, b_);
        if (!g.is_constant()) {
            a_ = *Poly::div_exact(a_, g);
            b_ = *Poly::div_exact(b_, g);
        }
    }

    const Poly& a() const { return a_; }
    const Poly& b() const { return b_; }
    AffineForm form() const { return AffineForm(a_, b_); }
    /// Dual vector field v = B dx - A dy (contracts to zero).
    VectorField field() const { return VectorField{b_, -a_}; }

    bool is_singular() const {
        return constant_coeff(a_).is_zero() && constant_coeff(b_).is_zero();
    }

    static Scalar constant_coeff(const Poly& p) {
        for (auto& [m, c] : p.terms())
            if (m.is_one()) return c;
        return Scalar();
    }

private:
    Poly a_, b_;
};

struct Mat2 {
    Scalar a, b, c, d;  // [[a, b], [c, d]]
    Scalar trace() const { return a + d; }
    Scalar det() const { return a * d - b * c; }
    bool is_zero() const { return a.is_zero() && b.is_zero() && c.is_zero() && d.is_zero(); }
    std::string str() const {
        return "[[" + a.str() + ", " + b.str() + "], [" + c.str() + ", " + d.str() + "]]";
    }
};

/// Jacobian of the dual vector field at the origin.
inline Mat2 linear_part(const LocalModel& m) {
    if (!m.is_singular()) throw Error("not a singular point");
    VectorField v = m.field();
    auto entry = [](const Poly& p, VarId var) {
        return LocalModel::constant_coeff(p.derivative(var));
    };
    return Mat2{entry(v.vx, VarPool::X), entry(v.vx, VarPool::Y),
                entry(v.vy, VarPool::X), entry(v.vy, VarPool::Y)};
}

enum class ReducedVerdict { Reduced, NotReduced, UndecidableSymbolic };

struct ReducedReport {
    ReducedVerdict verdict;
    Mat2 linear;
    Scalar trace, det;
    std::string note;
};

namespace detail {
/// Writes s as r0 + r1*theta in Q(theta), theta^2 = alpha*theta + beta,
/// rationalizing the denominator. Returns false if s involves anything else.
inline bool quad_rationalize(const Scalar& s, VarId theta, const Rational& alpha,
                             const Rational& beta, Rational* r0, Rational* r1) {
    auto lin = [&](const PPoly& p, Rational* c0, Rational* c1) -> bool {
        *c0 = Rational(0);
        *c1 = Rational(0);
        for (auto& [m, c] : p.terms()) {
            int e = m.exponent(theta);
            if (m.degree() != e || e > 1) return false;
            (e == 0 ? *c0 : *c1) = c;
        }
        return true;
    };
    Rational n0, n1, d0, d1;
    if (!lin(s.num(), &n0, &n1) || !lin(s.den(), &d0, &d1)) return false;
    // 1/(d0 + d1 t) = (d0 + d1 a - d1 t) / (d0^2 + a d0 d1 - b d1^2)
    Rational nrm = d0 * d0 + alpha * d0 * d1 - beta * d1 * d1;
    if (nrm.is_zero()) return false;
    Rational e0 = (d0 + d1 * alpha) / nrm, e1 = -d1 / nrm;
    // (n0 + n1 t)(e0 + e1 t) with t^2 = a t + b
    *r0 = n0 * e0 + n1 * e1 * beta;
    *r1 = n0 * e1 + n1 * e0 + n1 * e1 * alpha;
    return true;
}

/// Positive-rational test for the eigenvalue ratio via w = trace^2/det:
/// the ratio is a positive rational iff w is rational, w >= 4, and w(w-4)
/// is a rational square.
inline bool ratio_positive_rational(const Rational& w) {
    if (w < Rational(4)) return false;
    return (w * (w - Rational(4))).is_square();
}
}  // namespace detail

/// Reduced singularity test: non-nilpotent linear part whose eigenvalue
/// ratio is not a positive rational (zero and infinity are allowed).
inline ReducedReport is_reduced(const LocalModel& m, const ConstraintSet& cs = ConstraintSet()) {
    Mat2 lp = linear_part(m);
    ReducedReport rep{ReducedVerdict::UndecidableSymbolic, lp, cs.reduce(lp.trace()), cs.reduce(lp.det()), ""};
    const Scalar& T = rep.trace;
    const Scalar& D = rep.det;
    if (T.is_zero() && D.is_zero()) {
        rep.verdict = ReducedVerdict::NotReduced;
        rep.note = "nilpotent linear part";
        return rep;
    }
    auto decide_rational = [&](const Rational& t, const Rational& d) {
        if (d.is_zero()) {
            rep.verdict = ReducedVerdict::Reduced;  // ratio zero or infinite
            rep.note = "one eigenvalue zero";
        } else {
            Rational w = t * t / d;
            if (detail::ratio_positive_rational(w)) {
                rep.verdict = ReducedVerdict::NotReduced;
                rep.note = "eigenvalue ratio is a positive rational";
            } else {
                rep.verdict = ReducedVerdict::Reduced;
            }
        }
    };
    if (parameter_free(T) && parameter_free(D)) {
        decide_rational(rational_value(T), rational_value(D));
        return rep;
    }
    // single quadratic parameter constraint: decide inside Q(theta)
    if (cs.generators().size() == 1) {
        const PPoly& g = cs.generators()[0].gen;
        auto gv = g.vars();
        if (gv.size() == 1) {
            VarId theta = *gv.begin();
            UniPoly u = to_unipoly(g, theta);
            if (u.degree() == 2) {
                Rational alpha = -u.c[1] / u.c[2], beta = -u.c[0] / u.c[2];
                Rational t0, t1, d0, d1;
                if (detail::quad_rationalize(T, theta, alpha, beta, &t0, &t1) &&
                    detail::quad_rationalize(D, theta, alpha, beta, &d0, &d1)) {
                    if (d0.is_zero() && d1.is_zero()) {
                        rep.verdict = t0.is_zero() && t1.is_zero() ? ReducedVerdict::NotReduced
                                                                   : ReducedVerdict::Reduced;
                        rep.note = rep.verdict == ReducedVerdict::Reduced ? "one eigenvalue zero"
                                                                          : "nilpotent linear part";
                        return rep;
                    }
                    // w = T^2 / D in Q(theta)
                    Scalar w = cs.reduce(T * T) / cs.reduce(D);
                    Rational w0, w1;
                    if (detail::quad_rationalize(w, theta, alpha, beta, &w0, &w1)) {
                        if (!w1.is_zero()) {
                            rep.verdict = ReducedVerdict::Reduced;  // ratio irrational
                            rep.note = "eigenvalue ratio outside Q";
                        } else if (detail::ratio_positive_rational(w0)) {
                            rep.verdict = ReducedVerdict::NotReduced;
                            rep.note = "eigenvalue ratio is a positive rational";
                        } else {
                            rep.verdict = ReducedVerdict::Reduced;
                        }
                        return rep;
                    }
                }
            }
        }
    }
    rep.verdict = ReducedVerdict::UndecidableSymbolic;
    rep.note = "symbolic parameters in the eigenvalue data";
    return rep;
}

/// One chart of a point blow-up. Internal variables (x, y) stand for the
/// chart coordinates; the exceptional divisor is the indicated coordinate
/// axis.
struct BlowupChart {
    enum class Kind { U, V } kind;  // U: x=u, y=uv (E: u=0); V: x=uv, y=v (E: v=0)
    AffineForm primitive;
    int exc_multiplicity = 0;
    bool exceptional_invariant = false;

    std::string label() const { return kind == Kind::U ? "u-chart" : "v-chart"; }
};

inline BlowupChart blowup_chart(const LocalModel& m, BlowupChart::Kind kind) {
    Poly au, bu;
    VarId excvar;
    if (kind == BlowupChart::Kind::U) {
        std::map<VarId, Poly> sub = {{VarPool::Y, poly_x() * poly_y()}};
        Poly as = m.a().substitute(sub), bs = m.b().substitute(sub);
        au = as + poly_y() * bs;
        bu = poly_x() * bs;
        excvar = VarPool::X;
    } else {
        std::map<VarId, Poly> sub = {{VarPool::X, poly_x() * poly_y()}};
        Poly as = m.a().substitute(sub), bs = m.b().substitute(sub);
        au = poly_y() * as;
        bu = poly_x() * as + bs;
        excvar = VarPool::Y;
    }
    // exceptional multiplicity: the exact power of the exceptional coordinate
    // dividing the raw transform
    int mult = INT32_MAX;
    for (const Poly* p : {&au, &bu}) {
        if (p->is_zero()) continue;
        for (auto& [mono, c] : p->terms()) mult = std::min(mult, mono.exponent(excvar));
    }
    if (mult == INT32_MAX) throw Error("blowup: transform vanished");
    auto cs = content_and_primitive({au, bu});
    normalize_poly_pair(cs.primitives[0], cs.primitives[1]);
    BlowupChart out{kind, AffineForm(cs.primitives[0], cs.primitives[1]), mult, false};
    const Poly& test = kind == BlowupChart::Kind::U ? out.primitive.b() : out.primitive.a();
    out.exceptional_invariant = Poly::variable(excvar).divides(test);
    return out;
}

/// Blow up a singular point; returns both charts.
inline std::pair<BlowupChart, BlowupChart> blowup_point(const AffineForm& w, const AffinePoint& p) {
    LocalModel m = LocalModel::at(w, p);
    if (!m.is_singular()) throw Error("blowup: center is not a singular point");
    BlowupChart u = blowup_chart(m, BlowupChart::Kind::U);
    BlowupChart v = blowup_chart(m, BlowupChart::Kind::V);
    if (u.exceptional_invariant != v.exceptional_invariant)
        throw Error("blowup: chart invariance verdicts disagree");
    return {u, v};
}

/// Dicritical center: the exceptional divisor of one blow-up is not
/// invariant (generic transversality).
inline bool is_dicritical_center(const AffineForm& w, const AffinePoint& p) {
    auto [u, v] = blowup_point(w, p);
    return !u.exceptional_invariant;
}

/// Reduction tree produced by iterated blow-ups.
struct ReductionTree {
    struct Entry {
        int depth;
        std::string where;
        std::string action;  // "reduced", "blowup", "dicritical blowup", flags
    };
    std::vector<Entry> log;
    int blowups = 0;
    bool fully_reduced = true;
    bool cap_exceeded = false;
    std::vector<std::string> flags;

    void note(int depth, const std::string& where, const std::string& action) {
        log.push_back({depth, where, action});
    }
};

namespace detail {

/// Rational-root singular points on the exceptional axis {x=0} of a chart
/// form; irrational leftovers are reported via *quadratic (single quadratic
/// factor) or flags.
struct ExcPoints {
    std::vector<Rational> roots;
    std::optional<UniPoly> quadratic;  // squarefree quadratic factor without rational roots
    bool complete = true;
};

inline ExcPoints exceptional_singular_points(const AffineForm& prim, const ConstraintSet& cs) {
    ExcPoints out;
    // restrict both coefficients to x=0, collect parameter-split components
    std::vector<UniPoly> polys;
    bool nonzero = false;
    for (const Poly* p : {&prim.a(), &prim.b()}) {
        Poly r = cs.reduce(p->substitute(VarPool::X, Poly::zero()));
        if (r.is_zero()) continue;
        nonzero = true;
        for (auto& [pm, comp] : parameter_components(r)) polys.push_back(to_unipoly(comp, VarPool::Y));
    }
    if (!nonzero) throw Error("exceptional axis contained in singular locus");
    UniPoly g;
    bool first = true;
    for (auto& u : polys) {
        g = first ? u : UniPoly::gcd(g, u);
        first = false;
    }
    if (g.degree() < 1) return out;
    RootSearch rs = rational_roots(g.squarefree_part());
    out.complete = rs.complete;
    out.roots = rs.roots;
    if (rs.remaining.degree() == 2) out.quadratic = rs.remaining;
    else if (rs.remaining.degree() > 0) out.complete = false;
    return out;
}

inline std::string q_str(const UniPoly& q) {
    std::string s;
    for (size_t i = q.c.size(); i-- > 0;) {
        if (q.c[i].is_zero()) continue;
        if (!s.empty()) s += "+";
        s += q.c[i].str() + "*t^" + std::to_string(i);
    }
    return s;
}

inline void seidenberg_recurse(const LocalModel& germ, int depth, int cap,
                               const ConstraintSet& cs, const std::string& where,
                               ReductionTree& tree, int theta_count) {
    if (!germ.is_singular()) return;
    ReducedReport rr = is_reduced(germ, cs);
    if (rr.verdict == ReducedVerdict::Reduced) {
        tree.note(depth, where, "reduced");
        return;
    }
    if (rr.verdict == ReducedVerdict::UndecidableSymbolic) {
        tree.note(depth, where, "undecidable_symbolic");
        tree.fully_reduced = false;
        tree.flags.push_back("undecidable singularity at " + where + ": " + rr.note);
        return;
    }
    if (depth >= cap) {
        tree.note(depth, where, "not fully reduced (depth cap)");
        tree.fully_reduced = false;
        tree.cap_exceeded = true;
        return;
    }
    BlowupChart u = blowup_chart(germ, BlowupChart::Kind::U);
    BlowupChart v = blowup_chart(germ, BlowupChart::Kind::V);
    ++tree.blowups;
    tree.note(depth, where, u.exceptional_invariant ? "blowup" : "dicritical blowup");

    // singular points on the exceptional axis of the U chart
    ExcPoints pts = exceptional_singular_points(u.primitive, cs);
    if (!pts.complete)
        tree.flags.push_back("singular points beyond the solver cap at " + where);
    for (auto& y0 : pts.roots) {
        LocalModel sub = LocalModel::at(u.primitive, AffinePoint{Rational(0), y0});
        seidenberg_recurse(sub, depth + 1, cap, cs, where + "/u y=" + y0.str(), tree, theta_count);
    }
    if (pts.quadratic) {
        if (theta_count >= 1 || !cs.empty()) {
            tree.fully_reduced = false;
            tree.flags.push_back("non-rational singular point beyond quadratic support at " + where);
        } else {
            // conjugate pair handled symmetrically: translate by theta with its
            // minimal polynomial attached as a constraint
            VarId tv = param("_theta");
            UniPoly q = *pts.quadratic;
            ConstraintSet cs2 = cs;
            cs2.add(PPoly::variable(tv, 2).scaled(q.c[2]) + PPoly::variable(tv, 1).scaled(q.c[1]) +
                    PPoly::constant(q.c[0]));
            Poly shift = poly_y() + Poly::constant(scalar_param("_theta"));
            auto [pa, pb] = u.primitive.primitive_pair();
            LocalModel sub(cs2.reduce(pa.substitute(VarPool::Y, shift)),
                           cs2.reduce(pb.substitute(VarPool::Y, shift)));
            seidenberg_recurse(sub, depth + 1, cap, cs2, where + "/u y=theta(" + q_str(q) + ")",
                               tree, theta_count + 1);
        }
    }
    // the V chart contributes exactly one new point: its origin
    LocalModel far = LocalModel::at_origin(v.primitive);
    if (far.is_singular())
        seidenberg_recurse(far, depth + 1, cap, cs, where + "/v origin", tree, theta_count);
}

}  // namespace detail

/// Iterated blow-up of a singular point until every singularity on the
/// exceptional locus is reduced, capped at depth_cap.
inline ReductionTree seidenberg_reduce(const AffineForm& w, const AffinePoint& p, int depth_cap = 8,
                                       const ConstraintSet& cs = ConstraintSet()) {
    if (depth_cap < 1) throw Error("seidenberg_reduce: depth cap must be >= 1");
    LocalModel germ = LocalModel::at(w, p);
    if (!germ.is_singular()) throw Error("seidenberg_reduce: not a singular point");
    ReductionTree tree;
    detail::seidenberg_recurse(germ, 0, depth_cap, cs, "root", tree, 0);
    return tree;
}

inline LocalModel LocalModel::at(const ProjForm& w, const ProjPoint& p) {
    if (!p.h[2].is_zero()) {
        AffineForm aw = dehomogenize(w, Chart::Z);
        return LocalModel::at(aw, AffinePoint{p.h[0] / p.h[2], p.h[1] / p.h[2]});
    }
    if (!p.h[1].is_zero()) {
        AffineForm aw = dehomogenize(w, Chart::Y);
        return LocalModel::at(aw, AffinePoint{p.h[0] / p.h[1], p.h[2] / p.h[1]});
    }
    AffineForm aw = dehomogenize(w, Chart::X);
    return LocalModel::at(aw, AffinePoint{p.h[1] / p.h[0], p.h[2] / p.h[0]});
}

}  // namespace folia
