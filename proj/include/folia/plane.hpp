#pragma once

#include "folia/ring.hpp"

#include <array>
#include <optional>

namespace folia {

enum class Chart { X, Y, Z };

inline std::string chart_name(Chart c) { return c == Chart::X ? "x" : c == Chart::Y ? "y" : "z"; }

/// Point of the projective plane with rational homogeneous coordinates,
/// normalized integer-primitive with first nonzero coordinate positive.
struct ProjPoint {
    std::array<Rational, 3> h;

    static ProjPoint of(Rational a, Rational b, Rational c) {
        ProjPoint p{{std::move(a), std::move(b), std::move(c)}};
        p.normalize();
        return p;
    }
    void normalize() {
        BigInt g(0), l(1);
        for (auto& v : h) {
            g = BigInt::gcd(g, v.num());
            l = BigInt::lcm(l, v.den());
        }
        if (g.is_zero()) throw Error("ProjPoint: all coordinates zero");
        Rational u(g, l);
        for (auto& v : h)
            if (v.sign() != 0) { if (v.sign() < 0) u = -u; break; }
        for (auto& v : h) v = v / u;
    }
    friend bool operator==(const ProjPoint& a, const ProjPoint& b) { return a.h == b.h; }
    friend bool operator<(const ProjPoint& a, const ProjPoint& b) {
        for (int i = 0; i < 3; ++i) {
            if (a.h[i] < b.h[i]) return true;
            if (b.h[i] < a.h[i]) return false;
        }
        return false;
    }
    std::string str() const { return "[" + h[0].str() + ":" + h[1].str() + ":" + h[2].str() + "]"; }
};

namespace detail {
inline void require_homogeneous_same_degree(const std::vector<const Poly*>& ps, int* deg_out,
                                            const char* what) {
    int d = -1;
    for (auto* p : ps) {
        int dp;
        if (!p->is_homogeneous(&dp)) throw Error(std::string(what) + ": inhomogeneous coefficient");
        if (dp < 0) continue;  // zero polynomial matches any degree
        if (d < 0) d = dp;
        else if (d != dp) throw Error(std::string(what) + ": mismatched coefficient degrees");
    }
    if (d < 0) throw Error(std::string(what) + ": zero form");
    *deg_out = d;
}
}  // namespace detail

inline bool euler_check(const Poly& a, const Poly& b, const Poly& c) {
    int d;
    detail::require_homogeneous_same_degree({&a, &b, &c}, &d, "euler_check");
    Poly s = poly_x() * a + poly_y() * b + poly_z() * c;
    return s.is_zero();
}

/// Projective 1-form A dx + B dy + C dz with homogeneous coefficients of a
/// common degree satisfying the Euler relation xA + yB + zC = 0.
class ProjForm {
public:
    ProjForm(Poly a, Poly b, Poly c) : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)) {
        detail::require_homogeneous_same_degree({&a_, &b_, &c_}, &deg_, "ProjForm");
        if (!(poly_x() * a_ + poly_y() * b_ + poly_z() * c_).is_zero())
            throw Error("ProjForm: Euler relation fails");
        primitive_ = Poly::gcd_list({a_, b_, c_}).is_constant();
    }

    const Poly& a() const { return a_; }
    const Poly& b() const { return b_; }
    const Poly& c() const { return c_; }
    const Poly& coeff(int i) const { return i == 0 ? a_ : i == 1 ? b_ : c_; }
    int coeff_degree() const { return deg_; }
    bool is_primitive() const { return primitive_; }

    /// Joint content and primitive form; content * primitive == *this exactly.
    std::pair<Poly, ProjForm> primitive_split() const {
        auto cs = content_and_primitive({a_, b_, c_});
        return {cs.content, ProjForm(cs.primitives[0], cs.primitives[1], cs.primitives[2])};
    }

    /// Divides out the joint unit so equal foliation representatives built the
    /// same way compare equal; returns the extracted unit.
    Scalar canonicalize() {
        std::vector<const Scalar*> cs;
        for (const Poly* p : {&a_, &b_, &c_})
            for (auto& [m, c] : p->terms()) cs.push_back(&c);
        if (cs.empty()) throw Error("ProjForm: zero form");
        Scalar u = FieldTraits<Scalar>::joint_unit(cs);
        a_ = a_.scaled(u.inverse());
        b_ = b_.scaled(u.inverse());
        c_ = c_.scaled(u.inverse());
        return u;
    }
    ProjForm canonical() const {
        ProjForm f = *this;
        f.canonicalize();
        return f;
    }

    ProjForm scaled(const Scalar& s) const { return ProjForm(a_.scaled(s), b_.scaled(s), c_.scaled(s)); }

    friend bool operator==(const ProjForm& f, const ProjForm& g) {
        return f.a_ == g.a_ && f.b_ == g.b_ && f.c_ == g.c_;
    }

    /// Wedge product coefficients of this ∧ other:
    /// (dx∧dy, dx∧dz, dy∧dz) components.
    std::array<Poly, 3> wedge(const ProjForm& o) const {
        return {a_ * o.b_ - b_ * o.a_, a_ * o.c_ - c_ * o.a_, b_ * o.c_ - c_ * o.b_};
    }

    std::string str() const;

private:
    Poly a_, b_, c_;
    int deg_ = 0;
    bool primitive_ = false;
};

/// degree of the foliation cut out by a primitive projective 1-form:
/// one less than the common coefficient degree.
inline int foliation_degree(const ProjForm& w) {
    if (!w.is_primitive()) throw Error("foliation_degree: reduce first");
    return w.coeff_degree() - 1;
}

/// Affine 1-form (A dx + B dy)/h on C^2 with gcd(A, B, h) = 1.
class AffineForm {
public:
    AffineForm(Poly a, Poly b, Poly h = poly_int(1))
        : a_(std::move(a)), b_(std::move(b)), h_(std::move(h)) {
        if (a_.is_zero() && b_.is_zero()) throw Error("AffineForm: zero form");
        if (h_.is_zero()) throw Error("AffineForm: zero denominator");
        for (const Poly* p : {&a_, &b_, &h_})
            if (p->contains_var(VarPool::Z)) throw Error("AffineForm: z in affine form");
        normalize();
    }
    static AffineForm from_rational(const RatFunc& fx, const RatFunc& fy) {
        Poly h = Poly::lcm(fx.den(), fy.den());
        Poly a = fx.num() * *Poly::div_exact(h, fx.den());
        Poly b = fy.num() * *Poly::div_exact(h, fy.den());
        return AffineForm(a, b, h);
    }

    const Poly& a() const { return a_; }
    const Poly& b() const { return b_; }
    const Poly& den() const { return h_; }
    RatFunc dx_coeff() const { return RatFunc(a_, h_); }
    RatFunc dy_coeff() const { return RatFunc(b_, h_); }

    /// Primitive polynomial numerator pair (defines the same foliation).
    std::pair<Poly, Poly> primitive_pair() const {
        auto cs = content_and_primitive({a_, b_});
        return {cs.primitives[0], cs.primitives[1]};
    }

    friend bool operator==(const AffineForm& f, const AffineForm& g) {
        return f.a_ == g.a_ && f.b_ == g.b_ && f.h_ == g.h_;
    }

    std::string str() const;

private:
    Poly a_, b_, h_;

    void normalize() {
        Poly g = Poly::gcd_list({a_, b_, h_});
        if (!g.is_constant()) {
            a_ = *Poly::div_exact(a_, g);
            b_ = *Poly::div_exact(b_, g);
            h_ = *Poly::div_exact(h_, g);
        }
        Scalar u = h_.canonicalize();
        a_ = a_.scaled(u.inverse());
        b_ = b_.scaled(u.inverse());
    }
};

/// Joint unit normalization of a coefficient list of polynomials
/// (first nonzero leading coefficient becomes positive, contents cleared).
inline void normalize_poly_pair(Poly& a, Poly& b) {
    std::vector<const Scalar*> cs;
    for (const Poly* p : {&a, &b})
        for (auto& [m, c] : p->terms()) cs.push_back(&c);
    if (cs.empty()) return;
    Scalar u = FieldTraits<Scalar>::joint_unit(cs);
    a = a.scaled(u.inverse());
    b = b.scaled(u.inverse());
}

/// Polynomial vector field v = vx ∂x + vy ∂y on C^2.
struct VectorField {
    Poly vx, vy;
    std::string str() const;
};

/// v = B ∂x - A ∂y contracts to zero against A dx + B dy.
inline VectorField dual_vector_field(const AffineForm& w) {
    return VectorField{w.b(), -w.a()};
}

inline RatFunc contract(const AffineForm& w, const VectorField& v) {
    return RatFunc(w.a() * v.vx + w.b() * v.vy, w.den());
}

/// Rational self-map of P^2: three coprime homogeneous components of equal
/// degree d >= 1 with nonvanishing Jacobian determinant.
class ProjMap {
public:
    ProjMap(Poly p, Poly q, Poly r) : p_(std::move(p)), q_(std::move(q)), r_(std::move(r)) {
        detail::require_homogeneous_same_degree({&p_, &q_, &r_}, &deg_, "ProjMap");
        if (deg_ < 1) throw Error("ProjMap: degree must be >= 1");
        Poly g = Poly::gcd_list({p_, q_, r_});
        if (!g.is_constant()) {
            p_ = *Poly::div_exact(p_, g);
            q_ = *Poly::div_exact(q_, g);
            r_ = *Poly::div_exact(r_, g);
            deg_ -= g.total_degree();
            if (deg_ < 1) throw Error("ProjMap: degree must be >= 1 after content removal");
        }
        if (jacobian().is_zero()) throw Error("map not dominant");
    }

    const Poly& p() const { return p_; }
    const Poly& q() const { return q_; }
    const Poly& r() const { return r_; }
    const Poly& component(int i) const { return i == 0 ? p_ : i == 1 ? q_ : r_; }
    int degree() const { return deg_; }

    /// 3x3 Jacobian determinant of the components; homogeneous of degree 3(d-1).
    Poly jacobian() const {
        std::array<std::array<Poly, 3>, 3> m;
        const std::array<const Poly*, 3> comp = {&p_, &q_, &r_};
        const std::array<VarId, 3> vars = {VarPool::X, VarPool::Y, VarPool::Z};
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) m[i][j] = comp[i]->derivative(vars[j]);
        return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
             - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
             + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
    }

    Poly pull(const Poly& f) const {
        return f.substitute({{VarPool::X, p_}, {VarPool::Y, q_}, {VarPool::Z, r_}});
    }

    static ProjMap identity() { return ProjMap(poly_x(), poly_y(), poly_z()); }

    static ProjMap compose(const ProjMap& outer, const ProjMap& inner) {
        return ProjMap(inner.pull(outer.p()), inner.pull(outer.q()), inner.pull(outer.r()));
    }

    std::string str() const;

private:
    Poly p_, q_, r_;
    int deg_ = 0;
};

/// Rational self-map of C^2. Components are reduced fractions; a Laurent
/// monomial fast path records the exponent matrix for monomial maps.
class AffineMap {
public:
    AffineMap(RatFunc f1, RatFunc f2) : f1_(std::move(f1)), f2_(std::move(f2)) {
        for (const RatFunc* f : {&f1_, &f2_})
            if (f->num().contains_var(VarPool::Z) || f->den().contains_var(VarPool::Z))
                throw Error("AffineMap: z in affine map");
        RatFunc jac = f1_.num().is_zero() || f2_.num().is_zero()
                          ? RatFunc()
                          : df(f1_, VarPool::X) * df(f2_, VarPool::Y) -
                                df(f1_, VarPool::Y) * df(f2_, VarPool::X);
        if (jac.is_zero()) throw Error("map not dominant");
        detect_monomial();
    }

    /// Monomial map (x^a y^b, x^c y^d) from an integer exponent matrix [[a,b],[c,d]].
    static AffineMap monomial(long long a, long long b, long long c, long long d) {
        return AffineMap(laurent(a, b), laurent(c, d));
    }

    const RatFunc& f1() const { return f1_; }
    const RatFunc& f2() const { return f2_; }
    bool is_monomial() const { return monomial_.has_value(); }
    std::array<long long, 4> monomial_matrix() const {
        if (!monomial_) throw Error("AffineMap: not a monomial map");
        return *monomial_;
    }

    static RatFunc df(const RatFunc& f, VarId v) {
        return RatFunc(f.num().derivative(v) * f.den() - f.num() * f.den().derivative(v),
                       f.den() * f.den());
    }

    RatFunc pull(const Poly& g) const {
        RatFunc acc;
        for (auto& [m, c] : g.terms()) {
            RatFunc t = RatFunc(Poly::constant(c));
            for (auto& [v, e] : m.entries()) {
                if (v == VarPool::X) t = t * f1_.pow(e);
                else if (v == VarPool::Y) t = t * f2_.pow(e);
                else throw Error("AffineMap: pulling back a non-affine polynomial");
            }
            acc = acc + t;
        }
        return acc;
    }
    RatFunc pull(const RatFunc& g) const { return pull(g.num()) / pull(g.den()); }

    std::string str() const;

private:
    RatFunc f1_, f2_;
    std::optional<std::array<long long, 4>> monomial_;

    static RatFunc laurent(long long ex, long long ey) {
        RatFunc r = RatFunc(poly_int(1));
        r = r * RatFunc(poly_x()).pow((int)ex);
        r = r * RatFunc(poly_y()).pow((int)ey);
        return r;
    }
    void detect_monomial() {
        auto exps = [](const RatFunc& f) -> std::optional<std::array<long long, 2>> {
            if (f.num().term_count() != 1 || f.den().term_count() != 1) return std::nullopt;
            if (!(f.num().leading_coefficient() == scalar_int(1))) return std::nullopt;
            if (!(f.den().leading_coefficient() == scalar_int(1))) return std::nullopt;
            const Monomial &n = f.num().leading_monomial(), &d = f.den().leading_monomial();
            return std::array<long long, 2>{(long long)n.exponent(VarPool::X) - d.exponent(VarPool::X),
                                            (long long)n.exponent(VarPool::Y) - d.exponent(VarPool::Y)};
        };
        auto e1 = exps(f1_), e2 = exps(f2_);
        if (e1 && e2) monomial_ = {(*e1)[0], (*e1)[1], (*e2)[0], (*e2)[1]};
    }
};

namespace detail {
/// Joins coefficient/symbol pairs as "c1*s1 + c2*s2 - ...", dropping zeros.
inline std::string join_parts(const std::vector<std::pair<std::string, std::string>>& parts) {
    std::string out;
    for (auto& [cs, sym] : parts) {
        if (cs == "0") continue;
        bool neg = !cs.empty() && cs[0] == '-';
        std::string body = neg ? cs.substr(1) : cs;
        if (out.empty())
            out += neg ? "-" : "";
        else
            out += neg ? " - " : " + ";
        if (body == "1") out += sym;
        else out += body + "*" + sym;
    }
    return out.empty() ? "0" : out;
}
inline bool leading_sign_negative(const Poly& p) {
    if (p.is_zero()) return false;
    const Scalar& c = p.leading_coefficient();
    return c.num().leading_coefficient().sign() < 0;
}
inline std::string poly_part(const Poly& p) {
    if (p.is_zero()) return "0";
    if (leading_sign_negative(p)) return "-" + poly_part(-p);
    if (p.term_count() == 1) return p.str();
    return "(" + p.str() + ")";
}
inline std::string ratfunc_part(const RatFunc& f) {
    if (f.is_polynomial()) return poly_part(f.num());
    if (leading_sign_negative(f.num())) return "-" + ratfunc_part(-f);
    std::string n = f.num().term_count() > 1 ? "(" + f.num().str() + ")" : f.num().str();
    std::string d = f.den().term_count() > 1 ? "(" + f.den().str() + ")" : f.den().str();
    return "(" + n + "/" + d + ")";
}
}  // namespace detail

inline std::string ProjForm::str() const {
    return detail::join_parts({{detail::poly_part(a_), "dx"},
                               {detail::poly_part(b_), "dy"},
                               {detail::poly_part(c_), "dz"}});
}
inline std::string AffineForm::str() const {
    return detail::join_parts({{detail::ratfunc_part(dx_coeff()), "dx"},
                               {detail::ratfunc_part(dy_coeff()), "dy"}});
}
inline std::string VectorField::str() const {
    return detail::join_parts({{detail::poly_part(vx), "Dx"}, {detail::poly_part(vy), "Dy"}});
}
inline std::string ProjMap::str() const {
    return "[" + p_.str() + " : " + q_.str() + " : " + r_.str() + "]";
}
inline std::string AffineMap::str() const {
    return "(" + f1_.str() + ", " + f2_.str() + ")";
}

/// Clears denominators, homogenizes, and extracts content:
/// the primitive projective representative of an affine foliation.
inline ProjForm homogenize(const AffineForm& w) {
    auto [a, b] = w.primitive_pair();
    int m = std::max(a.total_degree(), b.total_degree());
    auto lift = [&](const Poly& p) {
        Poly out;
        for (auto& [mono, c] : p.terms()) {
            int dz = m - mono.degree();
            out.add_term(mono * Monomial::var(VarPool::Z, dz), c);
        }
        return out;
    };
    Poly ah = lift(a), bh = lift(b);
    Poly ra = poly_z() * ah;
    Poly rb = poly_z() * bh;
    Poly rc = -(poly_x() * ah + poly_y() * bh);
    auto cs = content_and_primitive({ra, rb, rc});
    ProjForm out(cs.primitives[0], cs.primitives[1], cs.primitives[2]);
    out.canonicalize();
    return out;
}

/// Restriction to an affine chart. Chart Z keeps coordinates (x, y);
/// chart X maps (y, z) -> (x, y); chart Y maps (x, z) -> (x, y).
inline AffineForm dehomogenize(const ProjForm& w, Chart chart) {
    Poly one = poly_int(1);
    std::map<VarId, Poly> sub;
    Poly ca, cb;
    switch (chart) {
        case Chart::Z:
            sub = {{VarPool::Z, one}};
            ca = w.a().substitute(sub);
            cb = w.b().substitute(sub);
            break;
        case Chart::X:
            sub = {{VarPool::X, one}, {VarPool::Y, poly_x()}, {VarPool::Z, poly_y()}};
            ca = w.b().substitute(sub);
            cb = w.c().substitute(sub);
            break;
        case Chart::Y:
            sub = {{VarPool::Y, one}, {VarPool::Z, poly_y()}};
            ca = w.a().substitute(sub);
            cb = w.c().substitute(sub);
            break;
    }
    if (ca.is_zero() && cb.is_zero()) throw Error("dehomogenize: form vanishes on this chart");
    auto cs = content_and_primitive({ca, cb});
    return AffineForm(cs.primitives[0], cs.primitives[1]);
}

}  // namespace folia
