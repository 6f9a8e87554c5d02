#pragma once

#include "folia/mpoly.hpp"

namespace folia {

/// Reduced fraction of polynomials. The denominator is kept canonical
/// (integer-primitive, positive leading coefficient) and coprime to the
/// numerator, so equality is literal.
template <class P>
class PolyFraction {
public:
    PolyFraction() : num_(P::zero()), den_(P::from_int(1)) {}
    PolyFraction(P n) : num_(std::move(n)), den_(P::from_int(1)) {}
    PolyFraction(P n, P d) : num_(std::move(n)), den_(std::move(d)) { reduce(); }
    static PolyFraction from_int(long long v) { return PolyFraction(P::from_int(v)); }

    const P& num() const { return num_; }
    const P& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.is_constant(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }

    friend PolyFraction operator+(const PolyFraction& a, const PolyFraction& b) {
        return PolyFraction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend PolyFraction operator-(const PolyFraction& a, const PolyFraction& b) {
        return PolyFraction(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend PolyFraction operator*(const PolyFraction& a, const PolyFraction& b) {
        return PolyFraction(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend PolyFraction operator/(const PolyFraction& a, const PolyFraction& b) {
        if (b.is_zero()) throw Error("PolyFraction: division by zero");
        return PolyFraction(a.num_ * b.den_, a.den_ * b.num_);
    }
    PolyFraction operator-() const {
        PolyFraction r = *this;
        r.num_ = -r.num_;
        return r;
    }
    PolyFraction inverse() const {
        if (is_zero()) throw Error("PolyFraction: inverse of zero");
        return PolyFraction(den_, num_);
    }
    PolyFraction pow(int e) const {
        if (e >= 0) return PolyFraction(num_.pow(e), den_.pow(e));
        return inverse().pow(-e);
    }
    friend bool operator==(const PolyFraction& a, const PolyFraction& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const PolyFraction& a, const PolyFraction& b) { return !(a == b); }

    std::string str() const {
        if (is_polynomial()) return num_.str();
        std::string n = num_.str(), d = den_.str();
        if (num_.term_count() > 1) n = "(" + n + ")";
        if (den_.term_count() > 1) d = "(" + d + ")";
        return n + "/" + d;
    }

private:
    P num_, den_;

    void reduce() {
        if (den_.is_zero()) throw Error("PolyFraction: zero denominator");
        if (num_.is_zero()) { den_ = P::from_int(1); return; }
        P g = P::gcd(num_, den_);
        if (!g.is_constant()) {
            num_ = *P::div_exact(num_, g);
            den_ = *P::div_exact(den_, g);
        }
        auto u = den_.canonicalize();
        num_ = num_.scaled(u.inverse());
    }
};

/// Scalar of the coefficient field Q(parameters): a reduced fraction of
/// polynomials in the declared parameters.
using Scalar = PolyFraction<PPoly>;

inline Scalar scalar_int(long long v) { return Scalar::from_int(v); }
inline Scalar scalar_rat(const Rational& r) { return Scalar(PPoly::constant(r)); }
inline Scalar scalar_param(const std::string& name) { return Scalar(PPoly::variable(param(name))); }

template <>
struct FieldTraits<Scalar> {
    static Scalar from_int(long long v) { return Scalar::from_int(v); }
    /// Clears parameter denominators and joint polynomial/rational content;
    /// flips sign so the leading coefficient has positive leading rational.
    static Scalar joint_unit(const std::vector<const Scalar*>& coeffs) {
        PPoly l = PPoly::from_int(1);
        for (auto* c : coeffs) l = PPoly::lcm(l, c->den());
        std::vector<PPoly> cleared;
        cleared.reserve(coeffs.size());
        for (auto* c : coeffs) cleared.push_back(c->num() * *PPoly::div_exact(l, c->den()));
        PPoly g = PPoly::gcd_list(cleared);
        // polynomial gcd is monic-primitive over Q; recover the joint rational content too
        BigInt gn(0), ld(1);
        for (auto& cl : cleared) {
            PPoly h = *PPoly::div_exact(cl, g);
            for (auto& [m, r] : h.terms()) {
                gn = BigInt::gcd(gn, r.num());
                ld = BigInt::lcm(ld, r.den());
            }
        }
        Scalar u(g.scaled(Rational(gn, ld)), l);
        // sign: leading rational coefficient of the cleared leading entry
        if (cleared.front().leading_coefficient().sign() < 0) u = -u;
        return u;
    }
    static bool is_rational(const Scalar& v) { return v.is_constant(); }
    static Rational to_rational(const Scalar& v) {
        if (v.is_zero()) return Rational(0);
        return v.num().constant_value() / v.den().constant_value();
    }
    static Scalar from_rational(const Rational& v) { return Scalar(PPoly::constant(v)); }
    static bool is_single_term(const Scalar& v) { return v.num().term_count() <= 1; }
    static std::string str(const Scalar& v) { return v.str(); }
    static bool print_needs_parens(const Scalar& v) {
        return v.num().term_count() > 1 || !v.is_polynomial() || v.num().leading_coefficient().sign() < 0;
    }
};

/// Polynomial in the coordinates x, y, z over Q(parameters).
using Poly = MPoly<Scalar>;
/// Rational function in the coordinates over Q(parameters).
using RatFunc = PolyFraction<Poly>;

}  // namespace folia
