#pragma once

#include "folia/rational.hpp"
#include "folia/varpool.hpp"

#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <vector>

namespace folia {

/// Power product, sparse: (variable id, exponent > 0) pairs sorted by id.
/// Ordered by graded lex with x > y > z > parameters (lower id = higher priority).
class Monomial {
public:
    Monomial() = default;
    static Monomial var(VarId v, int e = 1) {
        Monomial m;
        if (e < 0) throw Error("Monomial: negative exponent");
        if (e > 0) m.e_.push_back({v, e});
        return m;
    }

    bool is_one() const { return e_.empty(); }
    int degree() const {
        int d = 0;
        for (auto& [v, e] : e_) d += e;
        return d;
    }
    int exponent(VarId v) const {
        for (auto& [w, e] : e_)
            if (w == v) return e;
        return 0;
    }
    const std::vector<std::pair<VarId, int>>& entries() const { return e_; }

    Monomial operator*(const Monomial& o) const {
        Monomial r;
        size_t i = 0, j = 0;
        while (i < e_.size() || j < o.e_.size()) {
            if (j == o.e_.size() || (i < e_.size() && e_[i].first < o.e_[j].first))
                r.e_.push_back(e_[i++]);
            else if (i == e_.size() || o.e_[j].first < e_[i].first)
                r.e_.push_back(o.e_[j++]);
            else {
                r.e_.push_back({e_[i].first, e_[i].second + o.e_[j].second});
                ++i; ++j;
            }
        }
        return r;
    }
    bool divides(const Monomial& o) const {
        for (auto& [v, e] : e_)
            if (o.exponent(v) < e) return false;
        return true;
    }
    Monomial div(const Monomial& o) const {
        Monomial r;
        for (auto& [v, e] : e_) {
            int d = e - o.exponent(v);
            if (d < 0) throw Error("Monomial: not divisible");
            if (d > 0) r.e_.push_back({v, d});
        }
        return r;
    }
    Monomial pow(int k) const {
        Monomial r;
        if (k < 0) throw Error("Monomial: negative power");
        if (k == 0) return r;
        r = *this;
        for (auto& [v, e] : r.e_) e *= k;
        return r;
    }

    /// grlex: degree first, ties by first differing variable in priority
    /// order (ascending id), larger exponent wins.
    static int cmp(const Monomial& a, const Monomial& b) {
        int da = a.degree(), db = b.degree();
        if (da != db) return da < db ? -1 : 1;
        size_t i = 0, j = 0;
        while (i < a.e_.size() && j < b.e_.size()) {
            if (a.e_[i].first < b.e_[j].first) return 1;   // a has the higher-priority var
            if (b.e_[j].first < a.e_[i].first) return -1;
            if (a.e_[i].second != b.e_[j].second)
                return a.e_[i].second < b.e_[j].second ? -1 : 1;
            ++i; ++j;
        }
        if (i < a.e_.size()) return 1;
        if (j < b.e_.size()) return -1;
        return 0;
    }
    friend bool operator==(const Monomial& a, const Monomial& b) { return a.e_ == b.e_; }
    friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a.e_ == b.e_); }

private:
    std::vector<std::pair<VarId, int>> e_;
};

struct GrlexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const { return Monomial::cmp(a, b) > 0; }
};

/// Per-coefficient-field hooks used by MPoly for canonical normalization.
template <class K>
struct FieldTraits;

/// Dense integer-polynomial kernel used by the gcd fast paths: primitive
/// pseudo-remainder sequences keep coefficient growth polynomial.
namespace intpoly {
using IVec = std::vector<BigInt>;

inline void trim(IVec& v) {
    while (!v.empty() && v.back().is_zero()) v.pop_back();
}
inline void make_primitive(IVec& v) {
    trim(v);
    if (v.empty()) return;
    BigInt g(0);
    for (auto& c : v) g = BigInt::gcd(g, c);
    if (!g.is_one())
        for (auto& c : v) c = c / g;
    if (v.back().sign() < 0)
        for (auto& c : v) c = -c;
}
inline IVec prem(IVec a, const IVec& b) {
    trim(a);
    while (a.size() >= b.size() && !a.empty()) {
        BigInt lb = b.back(), la = a.back();
        size_t off = a.size() - b.size();
        for (auto& c : a) c = c * lb;
        for (size_t i = 0; i < b.size(); ++i) a[off + i] = a[off + i] - la * b[i];
        trim(a);
    }
    return a;
}
inline IVec gcd(IVec a, IVec b) {
    make_primitive(a);
    make_primitive(b);
    if (a.empty()) return b;
    if (b.empty()) return a;
    if (a.size() < b.size()) std::swap(a, b);
    for (;;) {
        if (b.size() == 1) return {BigInt(1)};
        IVec r = prem(a, b);
        if (r.empty()) return b;
        make_primitive(r);
        a = std::move(b);
        b = std::move(r);
    }
}
inline Rational eval(const IVec& v, const Rational& x) {
    Rational acc(0);
    for (size_t i = v.size(); i-- > 0;) acc = acc * x + Rational(v[i]);
    return acc;
}

/// Lagrange interpolation through (xs[i], ys[i]); ascending coefficients.
inline std::vector<Rational> lagrange(const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
    size_t n = xs.size();
    std::vector<Rational> acc(n, Rational(0));
    for (size_t i = 0; i < n; ++i) {
        std::vector<Rational> basis = {Rational(1)};
        Rational denom(1);
        for (size_t j = 0; j < n; ++j) {
            if (j == i) continue;
            denom = denom * (xs[i] - xs[j]);
            std::vector<Rational> next(basis.size() + 1, Rational(0));
            for (size_t k = 0; k < basis.size(); ++k) {
                next[k + 1] = next[k + 1] + basis[k];
                next[k] = next[k] - basis[k] * xs[j];
            }
            basis = std::move(next);
        }
        Rational f = ys[i] / denom;
        for (size_t k = 0; k < basis.size(); ++k) acc[k] = acc[k] + basis[k] * f;
    }
    while (!acc.empty() && acc.back().is_zero()) acc.pop_back();
    return acc;
}
}  // namespace intpoly

template <>
struct FieldTraits<Rational> {
    static Rational from_int(long long v) { return Rational(v); }
    /// Unit u with coeffs/u integer, joint content 1, leading coefficient positive.
    static Rational joint_unit(const std::vector<const Rational*>& coeffs) {
        BigInt g(0), l(1);
        for (auto* c : coeffs) {
            g = BigInt::gcd(g, c->num());
            l = BigInt::lcm(l, c->den());
        }
        Rational u(g, l);
        if (coeffs.front()->sign() < 0) u = -u;
        return u;
    }
    static bool is_rational(const Rational&) { return true; }
    static Rational to_rational(const Rational& v) { return v; }
    static Rational from_rational(const Rational& v) { return v; }
    static bool is_single_term(const Rational&) { return true; }
    static std::string str(const Rational& v) { return v.str(); }
    static bool print_needs_parens(const Rational& v) { return v.sign() < 0; }
};

/// Sparse multivariate polynomial over an exact field K.
/// Terms are kept in descending grlex order; no zero coefficients are stored.
template <class K>
class MPoly {
public:
    using Terms = std::map<Monomial, K, GrlexGreater>;

    MPoly() = default;
    static MPoly zero() { return MPoly(); }
    static MPoly constant(K c) {
        MPoly p;
        if (!c.is_zero()) p.t_.emplace(Monomial(), std::move(c));
        return p;
    }
    static MPoly from_int(long long v) { return constant(FieldTraits<K>::from_int(v)); }
    static MPoly variable(VarId v, int e = 1) {
        MPoly p;
        if (e == 0) return from_int(1);
        p.t_.emplace(Monomial::var(v, e), FieldTraits<K>::from_int(1));
        return p;
    }
    static MPoly term(Monomial m, K c) {
        MPoly p;
        if (!c.is_zero()) p.t_.emplace(std::move(m), std::move(c));
        return p;
    }

    bool is_zero() const { return t_.empty(); }
    bool is_constant() const { return t_.empty() || (t_.size() == 1 && t_.begin()->first.is_one()); }
    K constant_value() const {
        if (t_.empty()) return K();
        if (!is_constant()) throw Error("MPoly: not a constant");
        return t_.begin()->second;
    }
    size_t term_count() const { return t_.size(); }
    const Terms& terms() const { return t_; }

    const Monomial& leading_monomial() const {
        if (t_.empty()) throw Error("MPoly: leading term of zero");
        return t_.begin()->first;
    }
    const K& leading_coefficient() const {
        if (t_.empty()) throw Error("MPoly: leading term of zero");
        return t_.begin()->second;
    }

    int total_degree() const {
        int d = -1;
        for (auto& [m, c] : t_) d = std::max(d, m.degree());
        return d;
    }
    int degree(VarId v) const {
        int d = -1;
        for (auto& [m, c] : t_) d = std::max(d, m.exponent(v));
        return t_.empty() ? -1 : d;
    }
    bool is_homogeneous(int* deg = nullptr) const {
        if (t_.empty()) { if (deg) *deg = -1; return true; }
        int d = t_.begin()->first.degree();
        for (auto& [m, c] : t_)
            if (m.degree() != d) return false;
        if (deg) *deg = d;
        return true;
    }
    std::set<VarId> vars() const {
        std::set<VarId> s;
        for (auto& [m, c] : t_)
            for (auto& [v, e] : m.entries()) s.insert(v);
        return s;
    }
    bool contains_var(VarId v) const {
        for (auto& [m, c] : t_)
            if (m.exponent(v) > 0) return true;
        return false;
    }

    void add_term(const Monomial& m, const K& c) {
        if (c.is_zero()) return;
        auto it = t_.find(m);
        if (it == t_.end()) t_.emplace(m, c);
        else {
            it->second = it->second + c;
            if (it->second.is_zero()) t_.erase(it);
        }
    }

    friend MPoly operator+(const MPoly& a, const MPoly& b) {
        MPoly r = a;
        for (auto& [m, c] : b.t_) r.add_term(m, c);
        return r;
    }
    friend MPoly operator-(const MPoly& a, const MPoly& b) {
        MPoly r = a;
        for (auto& [m, c] : b.t_) r.add_term(m, -c);
        return r;
    }
    MPoly operator-() const {
        MPoly r = *this;
        for (auto& [m, c] : r.t_) c = -c;
        return r;
    }
    friend MPoly operator*(const MPoly& a, const MPoly& b) {
        MPoly r;
        for (auto& [ma, ca] : a.t_)
            for (auto& [mb, cb] : b.t_)
                r.add_term(ma * mb, ca * cb);
        return r;
    }
    MPoly scaled(const K& c) const {
        MPoly r;
        if (c.is_zero()) return r;
        for (auto& [m, k] : t_) r.t_.emplace(m, k * c);
        return r;
    }
    MPoly mul_term(const Monomial& m, const K& c) const {
        MPoly r;
        if (c.is_zero()) return r;
        for (auto& [mm, k] : t_) r.t_.emplace(mm * m, k * c);
        return r;
    }
    MPoly pow(int e) const {
        if (e < 0) throw Error("MPoly: negative power");
        MPoly acc = from_int(1), base = *this;
        while (e) {
            if (e & 1) acc = acc * base;
            if (e >>= 1) base = base * base;
        }
        return acc;
    }

    friend bool operator==(const MPoly& a, const MPoly& b) {
        if (a.t_.size() != b.t_.size()) return false;
        auto i = a.t_.begin();
        auto j = b.t_.begin();
        for (; i != a.t_.end(); ++i, ++j)
            if (!(i->first == j->first) || !(i->second == j->second)) return false;
        return true;
    }
    friend bool operator!=(const MPoly& a, const MPoly& b) { return !(a == b); }

    MPoly derivative(VarId v) const {
        MPoly r;
        for (auto& [m, c] : t_) {
            int e = m.exponent(v);
            if (e == 0) continue;
            Monomial m2 = m.div(Monomial::var(v, 1));
            r.add_term(m2, c * FieldTraits<K>::from_int(e));
        }
        return r;
    }

    /// Substitute each listed variable simultaneously; absent variables stay.
    MPoly substitute(const std::map<VarId, MPoly>& repl) const {
        MPoly r;
        std::map<VarId, std::vector<MPoly>> powers;  // cache of v -> [v^0, v^1, ...]
        for (auto& [m, c] : t_) {
            MPoly term = constant(c);
            Monomial rem;
            for (auto& [v, e] : m.entries()) {
                auto it = repl.find(v);
                if (it == repl.end()) { rem = rem * Monomial::var(v, e); continue; }
                auto& cache = powers[v];
                if (cache.empty()) cache.push_back(from_int(1));
                while ((int)cache.size() <= e) cache.push_back(cache.back() * it->second);
                term = term * cache[e];
            }
            r = r + term.mul_term(rem, FieldTraits<K>::from_int(1));
        }
        return r;
    }
    MPoly substitute(VarId v, const MPoly& value) const { return substitute(std::map<VarId, MPoly>{{v, value}}); }

    K evaluate(const std::map<VarId, K>& point) const {
        K acc{};
        for (auto& [m, c] : t_) {
            K t = c;
            for (auto& [v, e] : m.entries()) {
                auto it = point.find(v);
                if (it == point.end()) throw Error("MPoly: evaluate missing variable value");
                K p = FieldTraits<K>::from_int(1);
                for (int i = 0; i < e; ++i) p = p * it->second;
                t = t * p;
            }
            acc = acc + t;
        }
        return acc;
    }

    /// Coefficients with respect to v: position i holds the coefficient of v^i.
    std::vector<MPoly> collect(VarId v) const {
        std::vector<MPoly> out(std::max(0, degree(v)) + 1);
        if (t_.empty()) return out;
        for (auto& [m, c] : t_) {
            int e = m.exponent(v);
            Monomial m2 = e ? m.div(Monomial::var(v, e)) : m;
            out[e].add_term(m2, c);
        }
        return out;
    }
    static MPoly assemble(VarId v, const std::vector<MPoly>& coeffs) {
        MPoly r;
        for (size_t i = 0; i < coeffs.size(); ++i)
            r = r + coeffs[i].mul_term(Monomial::var(v, (int)i), FieldTraits<K>::from_int(1));
        return r;
    }

    /// Exact division; nullopt if b does not divide a.
    static std::optional<MPoly> div_exact(const MPoly& a, const MPoly& b) {
        if (b.is_zero()) throw Error("MPoly: division by zero");
        MPoly r = a, q;
        while (!r.is_zero()) {
            const Monomial& ml = r.leading_monomial();
            if (!b.leading_monomial().divides(ml)) return std::nullopt;
            Monomial mq = ml.div(b.leading_monomial());
            K cq = r.leading_coefficient() / b.leading_coefficient();
            q.add_term(mq, cq);
            r = r - b.mul_term(mq, cq);
        }
        return q;
    }
    bool divides(const MPoly& a) const { return div_exact(a, *this).has_value(); }

    /// Pseudo-remainder of a by b with respect to v (b with positive degree in v).
    static MPoly prem(const MPoly& a, const MPoly& b, VarId v) {
        int db = b.degree(v);
        if (db <= 0) throw Error("MPoly: prem needs positive divisor degree");
        auto bc = b.collect(v);
        MPoly lb = bc[db];
        MPoly r = a;
        int guard = 0;
        while (!r.is_zero() && r.degree(v) >= db) {
            if (++guard > 10000) throw Error("MPoly: prem runaway");
            auto rc = r.collect(v);
            int dr = (int)rc.size() - 1;
            MPoly lt = rc[dr];
            r = r * lb - b * lt.mul_term(Monomial::var(v, dr - db), FieldTraits<K>::from_int(1));
        }
        return r;
    }

    /// Content with respect to v: gcd of the v-coefficients.
    static MPoly content_wrt(const MPoly& p, VarId v) {
        MPoly c;
        for (auto& coeff : p.collect(v)) {
            if (coeff.is_zero()) continue;
            c = gcd(c, coeff);
            if (c.is_constant() && !c.is_zero()) return from_int(1);
        }
        return c;
    }
    static MPoly primitive_wrt(const MPoly& p, VarId v) {
        MPoly c = content_wrt(p, v);
        auto q = div_exact(p, c);
        return *q;
    }

    /// Normalizes in place to canonical unit form (see FieldTraits::joint_unit);
    /// returns the extracted unit u with old == u * new.
    K canonicalize() {
        if (t_.empty()) return FieldTraits<K>::from_int(1);
        std::vector<const K*> cs;
        cs.reserve(t_.size());
        for (auto& [m, c] : t_) cs.push_back(&c);
        K u = FieldTraits<K>::joint_unit(cs);
        if (!(u == FieldTraits<K>::from_int(1)))
            for (auto& [m, c] : t_) c = c / u;
        return u;
    }
    MPoly canonical() const {
        MPoly r = *this;
        r.canonicalize();
        return r;
    }

    /// Largest monomial dividing every term.
    static Monomial monomial_content(const MPoly& p) {
        std::map<VarId, int> mins;
        bool first = true;
        for (auto& [m, c] : p.t_) {
            if (first) {
                for (auto& [v, e] : m.entries()) mins[v] = e;
                first = false;
            } else {
                for (auto it = mins.begin(); it != mins.end();) {
                    int e = m.exponent(it->first);
                    if (e == 0) it = mins.erase(it);
                    else {
                        it->second = std::min(it->second, e);
                        ++it;
                    }
                }
            }
            if (mins.empty()) break;
        }
        Monomial out;
        for (auto& [v, e] : mins) out = out * Monomial::var(v, e);
        return out;
    }
    MPoly divided_by_monomial(const Monomial& m) const {
        MPoly r;
        for (auto& [mm, c] : t_) r.t_.emplace(mm.div(m), c);
        return r;
    }

    /// Dense coefficient vector as an integer polynomial, when rational.
    static std::optional<intpoly::IVec> integer_vector(const std::vector<K>& v) {
        BigInt l(1);
        for (auto& c : v) {
            if (!FieldTraits<K>::is_rational(c)) return std::nullopt;
            l = BigInt::lcm(l, FieldTraits<K>::to_rational(c).den());
        }
        intpoly::IVec out;
        out.reserve(v.size());
        for (auto& c : v) {
            Rational r = FieldTraits<K>::to_rational(c);
            out.push_back(r.num() * (l / r.den()));
        }
        intpoly::trim(out);
        return out;
    }

    /// Dense univariate gcd degree over the coefficient field; integer
    /// primitive PRS when the coefficients are rational.
    static int unigcd_degree(std::vector<K> a, std::vector<K> b) {
        auto ia = integer_vector(a), ib = integer_vector(b);
        if (ia && ib) {
            if (ia->empty()) return (int)ib->size() - 1;
            if (ib->empty()) return (int)ia->size() - 1;
            return (int)intpoly::gcd(std::move(*ia), std::move(*ib)).size() - 1;
        }
        auto trim = [](std::vector<K>& v) {
            while (!v.empty() && v.back().is_zero()) v.pop_back();
        };
        trim(a);
        trim(b);
        while (!b.empty()) {
            // a mod b
            while (a.size() >= b.size()) {
                K f = a.back() / b.back();
                size_t off = a.size() - b.size();
                for (size_t i = 0; i < b.size(); ++i) a[off + i] = a[off + i] - f * b[i];
                a.pop_back();
                trim(a);
                if (a.empty()) break;
            }
            std::swap(a, b);
        }
        return (int)a.size() - 1;
    }

    /// Dense coefficient list of p with respect to v (p univariate in v up to
    /// rational coefficients in the other slots already substituted away).
    static std::vector<K> dense_in(const MPoly& p, VarId v) {
        std::vector<K> out((size_t)std::max(p.degree(v), 0) + 1, K{});
        for (auto& [m, c] : p.terms()) out[(size_t)m.exponent(v)] = c;
        return out;
    }

    /// Certified evaluation/interpolation gcd for bivariate polynomials with
    /// rational coefficients. Returns nothing when a hypothesis fails; the
    /// result, when present, is exact (verified by two exact divisions).
    static std::optional<MPoly> bivariate_gcd_eval(const MPoly& a, const MPoly& b, VarId u, VarId t) {
        for (const MPoly* p : {&a, &b})
            for (auto& [m, c] : p->terms())
                if (!FieldTraits<K>::is_rational(c)) return std::nullopt;
        if (a.degree(u) <= 0 || b.degree(u) <= 0) return std::nullopt;
        // split off univariate contents
        auto content_t = [&](const MPoly& p) -> std::optional<intpoly::IVec> {
            std::optional<intpoly::IVec> acc;
            for (auto& coeff : p.collect(u)) {
                if (coeff.is_zero()) continue;
                auto iv = integer_vector(dense_in(coeff, t));
                if (!iv) return std::nullopt;
                acc = acc ? intpoly::gcd(std::move(*acc), std::move(*iv)) : *iv;
                if (acc->size() == 1) break;
            }
            return acc;
        };
        auto ca = content_t(a), cb = content_t(b);
        if (!ca || !cb) return std::nullopt;
        auto build_t_poly = [&](const intpoly::IVec& v) {
            MPoly out;
            for (size_t i = 0; i < v.size(); ++i)
                if (!v[i].is_zero())
                    out.add_term(Monomial::var(t, (int)i), FieldTraits<K>::from_rational(Rational(v[i])));
            return out;
        };
        MPoly capoly = build_t_poly(*ca), cbpoly = build_t_poly(*cb);
        intpoly::IVec cg = intpoly::gcd(*ca, *cb);
        MPoly ap = *div_exact(a, capoly), bp = *div_exact(b, cbpoly);
        // leading-coefficient gcd bounds the interpolation degree
        auto lc_of = [&](const MPoly& p) { return integer_vector(dense_in(p.collect(u).back(), t)); };
        auto la = lc_of(ap), lb = lc_of(bp);
        if (!la || !lb) return std::nullopt;
        intpoly::IVec gamma = intpoly::gcd(*la, *lb);
        int n_points = std::min(ap.degree(t), bp.degree(t)) + (int)gamma.size() + 1;
        if (n_points < 2) n_points = 2;
        std::vector<Rational> xs;
        std::vector<std::vector<Rational>> hs;  // monic sampled gcds
        int best = INT32_MAX;
        long long tau = 0;
        int guard = 0;
        while ((int)xs.size() < n_points) {
            if (++guard > 400) return std::nullopt;
            Rational tv(tau);
            tau = tau <= 0 ? -tau + 1 : -tau;
            if (intpoly::eval(gamma, tv).is_zero()) continue;
            auto spec = [&](const MPoly& p) {
                std::vector<Rational> dense((size_t)p.degree(u) + 1, Rational(0));
                for (auto& [m, c] : p.terms()) {
                    Rational cv = FieldTraits<K>::to_rational(c);
                    dense[(size_t)m.exponent(u)] =
                        dense[(size_t)m.exponent(u)] + cv * tv.pow(m.exponent(t));
                }
                intpoly::IVec iv;
                BigInt l(1);
                for (auto& c : dense) l = BigInt::lcm(l, c.den());
                for (auto& c : dense) iv.push_back(c.num() * (l / c.den()));
                intpoly::trim(iv);
                return iv;
            };
            intpoly::IVec fa = spec(ap), fb = spec(bp);
            if (fa.empty() || fb.empty()) continue;
            intpoly::IVec h = intpoly::gcd(std::move(fa), std::move(fb));
            int deg = (int)h.size() - 1;
            if (deg < best) {
                best = deg;
                xs.clear();
                hs.clear();
            }
            if (deg > best) continue;
            std::vector<Rational> monic(h.size());
            for (size_t i = 0; i < h.size(); ++i) monic[i] = Rational(h[i]) / Rational(h.back());
            xs.push_back(tv);
            hs.push_back(std::move(monic));
        }
        if (best == 0) {
            // u-parts coprime: the whole gcd is the content part
            return build_t_poly(cg).canonical();
        }
        // interpolate gamma(tau) * h_tau coefficient-wise
        MPoly H;
        for (int j = 0; j <= best; ++j) {
            std::vector<Rational> ys;
            ys.reserve(xs.size());
            for (size_t i = 0; i < xs.size(); ++i)
                ys.push_back(intpoly::eval(gamma, xs[i]) * hs[i][(size_t)j]);
            std::vector<Rational> coeff = intpoly::lagrange(xs, ys);
            for (size_t k = 0; k < coeff.size(); ++k)
                if (!coeff[k].is_zero())
                    H.add_term(Monomial::var(u, j) * Monomial::var(t, (int)k),
                               FieldTraits<K>::from_rational(coeff[k]));
        }
        if (H.is_zero()) return std::nullopt;
        // make u-primitive
        std::optional<intpoly::IVec> hc;
        for (auto& coeff : H.collect(u)) {
            if (coeff.is_zero()) continue;
            auto iv = integer_vector(dense_in(coeff, t));
            if (!iv) return std::nullopt;
            hc = hc ? intpoly::gcd(std::move(*hc), std::move(*iv)) : *iv;
            if (hc->size() == 1) break;
        }
        if (hc && hc->size() >= 2) H = *div_exact(H, build_t_poly(*hc));
        H = H.canonical();
        if (!div_exact(ap, H) || !div_exact(bp, H)) return std::nullopt;
        return (H * build_t_poly(cg)).canonical();
    }

    /// Certificate that gcd(a, b) is free of v: a specialization of the other
    /// variables keeping the leading v-coefficient alive yields coprime
    /// univariate images. Sound; failure means nothing.
    static bool coprime_in_var_certificate(const MPoly& a, const MPoly& b, VarId v) {
        std::set<VarId> others = a.vars();
        for (VarId u : b.vars()) others.insert(u);
        others.erase(v);
        if (others.empty()) return false;
        static const long long seeds[][2] = {{2, 3}, {1, -1}, {5, 2}, {-3, 7}, {4, 9}};
        for (auto& seed : seeds) {
            std::map<VarId, MPoly> sub;
            long long t = seed[0];
            for (VarId u : others) {
                sub.emplace(u, from_int(t));
                t = t * seed[1] + 1;
            }
            MPoly fa = a.substitute(sub), fb = b.substitute(sub);
            bool lead_alive = fa.degree(v) == a.degree(v) || fb.degree(v) == b.degree(v);
            if (!lead_alive) continue;
            if (fa.is_zero() || fb.is_zero()) continue;
            std::vector<K> ua((size_t)std::max(fa.degree(v), 0) + 1, K{});
            std::vector<K> ub((size_t)std::max(fb.degree(v), 0) + 1, K{});
            for (auto& [m, c] : fa.terms()) ua[(size_t)m.exponent(v)] = c;
            for (auto& [m, c] : fb.terms()) ub[(size_t)m.exponent(v)] = c;
            if (unigcd_degree(std::move(ua), std::move(ub)) == 0) return true;
        }
        return false;
    }

    /// gcd, canonically normalized. Monomial content split, then a
    /// coprimality certificate, then primitive PRS in the top variable.
    static MPoly gcd(const MPoly& a, const MPoly& b) {
        if (a.is_zero()) return b.canonical();
        if (b.is_zero()) return a.canonical();
        if (a.is_constant() || b.is_constant()) return from_int(1);
        Monomial ma = monomial_content(a), mb = monomial_content(b);
        Monomial mg;
        for (auto& [v, e] : ma.entries()) {
            int eb = mb.exponent(v);
            if (eb > 0) mg = mg * Monomial::var(v, std::min(e, eb));
        }
        if (!ma.is_one() || !mb.is_one()) {
            MPoly core = gcd(a.divided_by_monomial(ma), b.divided_by_monomial(mb));
            return core.mul_term(mg, FieldTraits<K>::from_int(1)).canonical();
        }
        std::set<VarId> vs = a.vars();
        for (VarId v : b.vars()) vs.insert(v);
        // homogeneous inputs with no monomial content: the gcd is the
        // homogenization of the dehomogenized gcd in one variable less
        if (vs.size() >= 2 && a.is_homogeneous() && b.is_homogeneous()) {
            VarId last = *vs.rbegin();
            MPoly g1 = gcd(a.substitute(last, from_int(1)), b.substitute(last, from_int(1)));
            int m = g1.total_degree();
            MPoly out;
            for (auto& [mono, c] : g1.terms())
                out.add_term(mono * Monomial::var(last, m - mono.degree()), c);
            return out.canonical();
        }
        VarId v = *vs.begin();
        if (a.degree(v) > 0 && b.degree(v) > 0 && vs.size() >= 2 &&
            coprime_in_var_certificate(a, b, v)) {
            return gcd(content_wrt(a, v), content_wrt(b, v));
        }
        if (vs.size() == 2) {
            VarId tvar = *std::next(vs.begin());
            if (auto h = bivariate_gcd_eval(a, b, v, tvar)) return h->canonical();
        }
        // contents and primitive parts with respect to v
        MPoly ca = content_wrt(a, v), cb = content_wrt(b, v);
        MPoly c = gcd(ca, cb);
        MPoly f = *div_exact(a, ca), g = *div_exact(b, cb);
        if (f.degree(v) < g.degree(v)) std::swap(f, g);
        MPoly h;
        if (g.degree(v) <= 0) {
            // primitive part free of v means the v-part of the gcd is trivial
            h = from_int(1);
        } else {
            int guard = 0;
            for (;;) {
                if (++guard > 1000) throw Error("MPoly: gcd runaway");
                MPoly r = prem(f, g, v);
                if (r.is_zero()) { h = g; break; }
                if (r.degree(v) == 0) { h = from_int(1); break; }
                f = g;
                g = primitive_wrt(r, v).canonical();
            }
            if (!h.is_constant()) h = primitive_wrt(h, v);
        }
        return (c * h).canonical();
    }
    static MPoly gcd_list(const std::vector<MPoly>& ps) {
        MPoly g;
        for (auto& p : ps) {
            g = gcd(g, p);
            if (g.is_constant() && !g.is_zero()) return from_int(1);
        }
        return g;
    }
    static MPoly lcm(const MPoly& a, const MPoly& b) {
        if (a.is_zero() || b.is_zero()) return zero();
        return (*div_exact(a * b, gcd(a, b))).canonical();
    }

    /// Squarefree decomposition (Yun), pairwise coprime factors with multiplicities.
    /// The product of factor^multiplicity equals the input up to a unit.
    static std::vector<std::pair<MPoly, int>> squarefree(const MPoly& p) {
        if (p.is_zero()) throw Error("squarefree: zero polynomial");
        std::vector<std::pair<MPoly, int>> out;
        MPoly q = p.canonical();
        if (q.is_constant()) return out;
        VarId v = *q.vars().begin();
        MPoly cont = content_wrt(q, v);
        MPoly pp = *div_exact(q, cont);
        if (!cont.is_constant()) {
            auto sub = squarefree(cont);
            out.insert(out.end(), sub.begin(), sub.end());
        }
        // Yun's algorithm on the v-primitive part
        MPoly f = pp, fp = pp.derivative(v);
        MPoly g = gcd(f, fp);
        MPoly bpol = *div_exact(f, g);
        MPoly cpol = *div_exact(fp, g);
        MPoly d = cpol - bpol.derivative(v);
        int i = 1, guard = 0;
        while (!bpol.is_constant()) {
            if (++guard > 200) throw Error("squarefree: runaway");
            MPoly ai = gcd(bpol, d);
            if (!ai.is_constant()) out.push_back({ai.canonical(), i});
            bpol = *div_exact(bpol, ai);
            cpol = *div_exact(d, ai);
            d = cpol - bpol.derivative(v);
            ++i;
        }
        return out;
    }

    std::string str() const {
        if (t_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (auto& [m, c] : t_) {
            bool single = FieldTraits<K>::is_single_term(c);
            std::string cs = FieldTraits<K>::str(c);
            bool neg = single && !cs.empty() && cs[0] == '-';
            if (first) {
                if (neg) { os << "-"; cs = cs.substr(1); }
            } else {
                os << (neg ? " - " : " + ");
                if (neg) cs = cs.substr(1);
            }
            first = false;
            if (m.is_one()) {
                os << (single ? cs : "(" + cs + ")");
                continue;
            }
            if (!(cs == "1")) {
                bool wrap = !single || FieldTraits<K>::print_needs_parens(c);
                os << (wrap ? "(" + cs + ")" : cs) << "*";
            }
            bool fv = true;
            for (auto& [v, e] : m.entries()) {
                if (!fv) os << "*";
                fv = false;
                os << VarPool::instance().name(v);
                if (e > 1) os << "^" << e;
            }
        }
        return os.str();
    }

private:
    Terms t_;
};

using PPoly = MPoly<Rational>;  // polynomials in the parameters over Q

}  // namespace folia
