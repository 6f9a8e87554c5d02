#pragma once

#include <cstdint>
#include <cstdlib>
#include <string>
#include <vector>
#include <stdexcept>
#include <algorithm>
#include <ostream>

namespace folia {

/// Arbitrary-precision signed integer, little-endian base 2^32 magnitude.
/// Division truncates toward zero; gcd is always nonnegative.
class BigInt {
public:
    BigInt() = default;
    BigInt(long long v) {
        if (v == 0) return;
        sign_ = v < 0 ? -1 : 1;
        unsigned long long a = v < 0 ? -(unsigned long long)v : (unsigned long long)v;
        while (a) { mag_.push_back((uint32_t)(a & 0xffffffffu)); a >>= 32; }
    }
    explicit BigInt(const std::string& s) {
        size_t i = 0;
        int sg = 1;
        if (i < s.size() && (s[i] == '+' || s[i] == '-')) { if (s[i] == '-') sg = -1; ++i; }
        if (i == s.size()) throw std::invalid_argument("BigInt: empty literal");
        BigInt acc;
        for (; i < s.size(); ++i) {
            if (s[i] < '0' || s[i] > '9') throw std::invalid_argument("BigInt: bad digit");
            acc = acc * BigInt(10) + BigInt(s[i] - '0');
        }
        *this = acc;
        if (!is_zero()) sign_ = sg;
    }

    bool is_zero() const { return sign_ == 0; }
    bool is_one() const { return sign_ == 1 && mag_.size() == 1 && mag_[0] == 1; }
    int sign() const { return sign_; }

    bool fits_ll() const {
        if (mag_.size() > 2) return false;
        unsigned long long a = abs_ull_unchecked();
        return a <= (unsigned long long)INT64_MAX + (sign_ < 0 ? 1ull : 0ull);
    }
    long long to_ll() const {
        if (!fits_ll()) throw std::overflow_error("BigInt: does not fit in long long");
        unsigned long long a = abs_ull_unchecked();
        return sign_ < 0 ? -(long long)a : (long long)a;
    }

    friend bool operator==(const BigInt& a, const BigInt& b) {
        return a.sign_ == b.sign_ && a.mag_ == b.mag_;
    }
    friend bool operator!=(const BigInt& a, const BigInt& b) { return !(a == b); }
    friend bool operator<(const BigInt& a, const BigInt& b) { return cmp(a, b) < 0; }
    friend bool operator>(const BigInt& a, const BigInt& b) { return cmp(a, b) > 0; }
    friend bool operator<=(const BigInt& a, const BigInt& b) { return cmp(a, b) <= 0; }
    friend bool operator>=(const BigInt& a, const BigInt& b) { return cmp(a, b) >= 0; }

    static int cmp(const BigInt& a, const BigInt& b) {
        if (a.sign_ != b.sign_) return a.sign_ < b.sign_ ? -1 : 1;
        int c = cmp_mag(a.mag_, b.mag_);
        return a.sign_ >= 0 ? c : -c;
    }

    BigInt operator-() const {
        BigInt r = *this;
        r.sign_ = -r.sign_;
        return r;
    }
    BigInt abs() const { return sign_ < 0 ? -*this : *this; }

    friend BigInt operator+(const BigInt& a, const BigInt& b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        BigInt r;
        if (a.sign_ == b.sign_) {
            r.mag_ = add_mag(a.mag_, b.mag_);
            r.sign_ = a.sign_;
        } else {
            int c = cmp_mag(a.mag_, b.mag_);
            if (c == 0) return BigInt();
            if (c > 0) { r.mag_ = sub_mag(a.mag_, b.mag_); r.sign_ = a.sign_; }
            else       { r.mag_ = sub_mag(b.mag_, a.mag_); r.sign_ = b.sign_; }
        }
        return r;
    }
    friend BigInt operator-(const BigInt& a, const BigInt& b) { return a + (-b); }

    friend BigInt operator*(const BigInt& a, const BigInt& b) {
        if (a.is_zero() || b.is_zero()) return BigInt();
        BigInt r;
        r.mag_.assign(a.mag_.size() + b.mag_.size(), 0);
        for (size_t i = 0; i < a.mag_.size(); ++i) {
            uint64_t carry = 0;
            for (size_t j = 0; j < b.mag_.size(); ++j) {
                uint64_t t = (uint64_t)a.mag_[i] * b.mag_[j] + r.mag_[i + j] + carry;
                r.mag_[i + j] = (uint32_t)t;
                carry = t >> 32;
            }
            size_t k = i + b.mag_.size();
            while (carry) {
                uint64_t t = (uint64_t)r.mag_[k] + carry;
                r.mag_[k] = (uint32_t)t;
                carry = t >> 32;
                ++k;
            }
        }
        r.trim();
        r.sign_ = a.sign_ * b.sign_;
        return r;
    }

    /// Truncated division: q = trunc(a/b), r = a - q*b (sign of r follows a).
    static void divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r) {
        if (b.is_zero()) throw std::domain_error("BigInt: division by zero");
        if (a.is_zero()) { q = BigInt(); r = BigInt(); return; }
        std::vector<uint32_t> qm, rm;
        divmod_mag(a.mag_, b.mag_, qm, rm);
        q.mag_ = std::move(qm); q.trim();
        r.mag_ = std::move(rm); r.trim();
        q.sign_ = q.mag_.empty() ? 0 : a.sign_ * b.sign_;
        r.sign_ = r.mag_.empty() ? 0 : a.sign_;
    }
    friend BigInt operator/(const BigInt& a, const BigInt& b) {
        BigInt q, r;
        divmod(a, b, q, r);
        return q;
    }
    friend BigInt operator%(const BigInt& a, const BigInt& b) {
        BigInt q, r;
        divmod(a, b, q, r);
        return r;
    }

    static BigInt gcd(BigInt a, BigInt b) {
        a = a.abs(); b = b.abs();
        while (!b.is_zero()) {
            BigInt t = a % b;
            a = std::move(b);
            b = std::move(t);
        }
        return a;
    }
    static BigInt lcm(const BigInt& a, const BigInt& b) {
        if (a.is_zero() || b.is_zero()) return BigInt();
        return (a / gcd(a, b) * b).abs();
    }
    static BigInt pow(BigInt base, unsigned long long e) {
        BigInt acc(1);
        while (e) {
            if (e & 1) acc = acc * base;
            base = base * base;
            e >>= 1;
        }
        return acc;
    }

    /// True iff *this is a perfect square; if so and root != nullptr, stores the nonnegative root.
    bool is_square(BigInt* root = nullptr) const {
        if (sign_ < 0) return false;
        if (is_zero()) { if (root) *root = BigInt(); return true; }
        // Newton iteration for integer sqrt.
        BigInt x = *this, y = (x + BigInt(1)) / BigInt(2);
        while (y < x) { x = y; y = (x + *this / x) / BigInt(2); }
        if (x * x == *this) { if (root) *root = x; return true; }
        return false;
    }

    std::string str() const {
        if (is_zero()) return "0";
        std::string out;
        BigInt t = abs(), base(1000000000);
        std::vector<uint32_t> chunks;
        while (!t.is_zero()) {
            BigInt q, r;
            divmod(t, base, q, r);
            chunks.push_back(r.is_zero() ? 0u : r.mag_[0]);
            t = q;
        }
        out = std::to_string(chunks.back());
        for (size_t i = chunks.size() - 1; i-- > 0;) {
            std::string part = std::to_string(chunks[i]);
            out += std::string(9 - part.size(), '0') + part;
        }
        return sign_ < 0 ? "-" + out : out;
    }
    friend std::ostream& operator<<(std::ostream& os, const BigInt& v) { return os << v.str(); }

private:
    std::vector<uint32_t> mag_;
    int sign_ = 0;

    unsigned long long abs_ull_unchecked() const {
        unsigned long long a = 0;
        if (mag_.size() > 1) a = (unsigned long long)mag_[1] << 32;
        if (!mag_.empty()) a |= mag_[0];
        return a;
    }
    void trim() {
        while (!mag_.empty() && mag_.back() == 0) mag_.pop_back();
        if (mag_.empty()) sign_ = 0;
        else if (sign_ == 0) sign_ = 1;
    }
    static int cmp_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
        if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
        for (size_t i = a.size(); i-- > 0;)
            if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
        return 0;
    }
    static std::vector<uint32_t> add_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
        const auto& big = a.size() >= b.size() ? a : b;
        const auto& small = a.size() >= b.size() ? b : a;
        std::vector<uint32_t> r(big.size() + 1, 0);
        uint64_t carry = 0;
        for (size_t i = 0; i < big.size(); ++i) {
            uint64_t t = (uint64_t)big[i] + (i < small.size() ? small[i] : 0) + carry;
            r[i] = (uint32_t)t;
            carry = t >> 32;
        }
        r[big.size()] = (uint32_t)carry;
        while (!r.empty() && r.back() == 0) r.pop_back();
        return r;
    }
    // requires |a| >= |b|
    static std::vector<uint32_t> sub_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
        std::vector<uint32_t> r(a.size(), 0);
        int64_t borrow = 0;
        for (size_t i = 0; i < a.size(); ++i) {
            int64_t t = (int64_t)a[i] - (i < b.size() ? b[i] : 0) - borrow;
            if (t < 0) { t += ((int64_t)1 << 32); borrow = 1; }
            else borrow = 0;
            r[i] = (uint32_t)t;
        }
        while (!r.empty() && r.back() == 0) r.pop_back();
        return r;
    }

    static std::vector<uint32_t> shl_mag(const std::vector<uint32_t>& a, unsigned s) {
        if (a.empty()) return {};
        std::vector<uint32_t> r(a.size() + 1, 0);
        if (s == 0) { r.assign(a.begin(), a.end()); r.push_back(0); }
        else {
            for (size_t i = 0; i < a.size(); ++i) {
                r[i] |= a[i] << s;
                r[i + 1] = a[i] >> (32 - s);
            }
        }
        return r;  // may carry a top zero; callers handle
    }

    // Knuth algorithm D on magnitudes.
    static void divmod_mag(const std::vector<uint32_t>& u0, const std::vector<uint32_t>& v0,
                           std::vector<uint32_t>& q, std::vector<uint32_t>& r) {
        q.clear(); r.clear();
        if (cmp_mag(u0, v0) < 0) { r = u0; return; }
        if (v0.size() == 1) {
            uint64_t d = v0[0], rem = 0;
            q.assign(u0.size(), 0);
            for (size_t i = u0.size(); i-- > 0;) {
                uint64_t cur = (rem << 32) | u0[i];
                q[i] = (uint32_t)(cur / d);
                rem = cur % d;
            }
            while (!q.empty() && q.back() == 0) q.pop_back();
            if (rem) r.push_back((uint32_t)rem);
            return;
        }
        unsigned s = 0;
        for (uint32_t top = v0.back(); !(top & 0x80000000u); top <<= 1) ++s;
        std::vector<uint32_t> vn = shl_mag(v0, s);
        while (!vn.empty() && vn.back() == 0) vn.pop_back();
        std::vector<uint32_t> un = shl_mag(u0, s);
        const size_t n = vn.size();
        if (un.size() < u0.size() + 1) un.resize(u0.size() + 1, 0);
        const size_t m = un.size() - 1 - n;
        q.assign(m + 1, 0);
        const uint64_t B = (uint64_t)1 << 32;
        for (size_t j = m + 1; j-- > 0;) {
            uint64_t num = ((uint64_t)un[j + n] << 32) | un[j + n - 1];
            uint64_t qhat = num / vn[n - 1], rhat = num % vn[n - 1];
            while (qhat >= B || qhat * vn[n - 2] > ((rhat << 32) | un[j + n - 2])) {
                --qhat;
                rhat += vn[n - 1];
                if (rhat >= B) break;
            }
            // multiply and subtract
            int64_t borrow = 0;
            uint64_t carry = 0;
            for (size_t i = 0; i < n; ++i) {
                uint64_t p = qhat * vn[i] + carry;
                carry = p >> 32;
                int64_t t = (int64_t)un[i + j] - (int64_t)(uint32_t)p - borrow;
                if (t < 0) { t += (int64_t)B; borrow = 1; }
                else borrow = 0;
                un[i + j] = (uint32_t)t;
            }
            int64_t t = (int64_t)un[j + n] - (int64_t)carry - borrow;
            if (t < 0) {
                // qhat was one too large: add back
                t += (int64_t)B;
                --qhat;
                uint64_t c2 = 0;
                for (size_t i = 0; i < n; ++i) {
                    uint64_t s2 = (uint64_t)un[i + j] + vn[i] + c2;
                    un[i + j] = (uint32_t)s2;
                    c2 = s2 >> 32;
                }
                t += (int64_t)c2;
                t &= (int64_t)(B - 1);
            }
            un[j + n] = (uint32_t)t;
            q[j] = (uint32_t)qhat;
        }
        while (!q.empty() && q.back() == 0) q.pop_back();
        // denormalize remainder
        r.assign(n, 0);
        for (size_t i = 0; i < n; ++i) {
            uint32_t lo = un[i] >> s;
            uint32_t hi = (s && i + 1 < un.size()) ? (un[i + 1] << (32 - s)) : 0;
            r[i] = lo | (s ? hi : 0);
        }
        while (!r.empty() && r.back() == 0) r.pop_back();
    }
};

}  // namespace folia
