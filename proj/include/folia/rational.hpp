#pragma once

#include "folia/bigint.hpp"

#include <string>
#include <stdexcept>
#include <ostream>

namespace folia {

/// Exact rational number: reduced fraction with positive denominator.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long n) : num_(n), den_(1) {}
    Rational(BigInt n) : num_(std::move(n)), den_(1) {}
    Rational(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) { normalize(); }
    Rational(long long n, long long d) : num_(n), den_(d) { normalize(); }

    /// Accepts "3", "-3", "3/4".
    static Rational parse(const std::string& s) {
        auto slash = s.find('/');
        if (slash == std::string::npos) return Rational(BigInt(s));
        return Rational(BigInt(s.substr(0, slash)), BigInt(s.substr(slash + 1)));
    }

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_integer() const { return den_.is_one(); }
    int sign() const { return num_.sign(); }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.is_zero()) throw std::domain_error("Rational: division by zero");
        return Rational(a.num_ * b.den_, a.den_ * b.num_);
    }
    Rational operator-() const {
        Rational r = *this;
        r.num_ = -r.num_;
        return r;
    }
    Rational inverse() const {
        if (is_zero()) throw std::domain_error("Rational: inverse of zero");
        return Rational(den_, num_);
    }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return a.num_ * b.den_ < b.num_ * a.den_;
    }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    Rational pow(long long e) const {
        if (e >= 0) return Rational(BigInt::pow(num_, (unsigned long long)e), BigInt::pow(den_, (unsigned long long)e));
        return inverse().pow(-e);
    }

    /// True iff this is the square of a rational; optionally returns the nonnegative root.
    bool is_square(Rational* root = nullptr) const {
        BigInt rn, rd;
        if (!num_.is_square(&rn) || !den_.is_square(&rd)) return false;
        if (root) *root = Rational(rn, rd);
        return true;
    }

    std::string str() const {
        if (den_.is_one()) return num_.str();
        return num_.str() + "/" + den_.str();
    }
    friend std::ostream& operator<<(std::ostream& os, const Rational& v) { return os << v.str(); }

private:
    BigInt num_, den_;

    void normalize() {
        if (den_.is_zero()) throw std::domain_error("Rational: zero denominator");
        if (num_.is_zero()) { den_ = BigInt(1); return; }
        if (den_.sign() < 0) { num_ = -num_; den_ = -den_; }
        BigInt g = BigInt::gcd(num_, den_);
        if (!g.is_one()) { num_ = num_ / g; den_ = den_ / g; }
    }
};

}  // namespace folia
