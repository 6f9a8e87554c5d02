#pragma once

#include "folia/resultant.hpp"
#include "folia/ring.hpp"

#include <algorithm>

namespace folia {

/// Dense univariate polynomial over Q, ascending coefficients.
struct UniPoly {
    std::vector<Rational> c;

    static UniPoly zero() { return {}; }
    static UniPoly constant(Rational r) {
        UniPoly p;
        if (!r.is_zero()) p.c = {std::move(r)};
        return p;
    }
    void trim() {
        while (!c.empty() && c.back().is_zero()) c.pop_back();
    }
    bool is_zero() const { return c.empty(); }
    int degree() const { return (int)c.size() - 1; }
    const Rational& lead() const { return c.back(); }

    Rational eval(const Rational& x) const {
        Rational acc(0);
        for (size_t i = c.size(); i-- > 0;) acc = acc * x + c[i];
        return acc;
    }
    UniPoly derivative() const {
        UniPoly d;
        for (size_t i = 1; i < c.size(); ++i) d.c.push_back(c[i] * Rational((long long)i));
        d.trim();
        return d;
    }
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        UniPoly r;
        r.c.assign(a.c.size() + b.c.size() - 1, Rational(0));
        for (size_t i = 0; i < a.c.size(); ++i)
            for (size_t j = 0; j < b.c.size(); ++j) r.c[i + j] = r.c[i + j] + a.c[i] * b.c[j];
        r.trim();
        return r;
    }
    friend UniPoly operator-(const UniPoly& a, const UniPoly& b) {
        UniPoly r = a;
        if (r.c.size() < b.c.size()) r.c.resize(b.c.size(), Rational(0));
        for (size_t i = 0; i < b.c.size(); ++i) r.c[i] = r.c[i] - b.c[i];
        r.trim();
        return r;
    }
    static void divmod(const UniPoly& a, const UniPoly& b, UniPoly& q, UniPoly& r) {
        if (b.is_zero()) throw Error("UniPoly: division by zero");
        q = {};
        r = a;
        while (!r.is_zero() && r.degree() >= b.degree()) {
            int k = r.degree() - b.degree();
            Rational f = r.lead() / b.lead();
            if ((int)q.c.size() <= k) q.c.resize((size_t)k + 1, Rational(0));
            q.c[(size_t)k] = q.c[(size_t)k] + f;
            for (size_t i = 0; i < b.c.size(); ++i)
                r.c[(size_t)k + i] = r.c[(size_t)k + i] - f * b.c[i];
            r.trim();
        }
        q.trim();
    }
    static UniPoly gcd(UniPoly a, UniPoly b) {
        while (!b.is_zero()) {
            UniPoly q, r;
            divmod(a, b, q, r);
            a = std::move(b);
            b = std::move(r);
        }
        if (!a.is_zero()) {
            Rational l = a.lead();
            for (auto& x : a.c) x = x / l;
        }
        return a;  // monic
    }
    UniPoly squarefree_part() const {
        if (is_zero()) return {};
        UniPoly g = gcd(*this, derivative());
        UniPoly q, r;
        divmod(*this, g, q, r);
        return q;
    }
    /// Extended Euclid: returns (g, s, t) monic with s*a + t*b = g.
    static std::tuple<UniPoly, UniPoly, UniPoly> ext_gcd(UniPoly a, UniPoly b) {
        UniPoly s0 = constant(Rational(1)), s1 = zero();
        UniPoly t0 = zero(), t1 = constant(Rational(1));
        while (!b.is_zero()) {
            UniPoly q, r;
            divmod(a, b, q, r);
            UniPoly s2 = s0 - q * s1, t2 = t0 - q * t1;
            a = std::move(b); b = std::move(r);
            s0 = std::move(s1); s1 = std::move(s2);
            t0 = std::move(t1); t1 = std::move(t2);
        }
        if (!a.is_zero()) {
            Rational l = a.lead();
            for (auto& x : a.c) x = x / l;
            for (auto& x : s0.c) x = x / l;
            for (auto& x : t0.c) x = x / l;
        }
        return {a, s0, t0};
    }
};

inline Rational rational_of(const Rational& r) { return r; }
inline Rational rational_of(const Scalar& s) { return rational_value(s); }

/// A polynomial in a single variable with rational coefficients, as UniPoly.
template <class K>
UniPoly to_unipoly(const MPoly<K>& p, VarId v) {
    UniPoly out;
    for (auto& [m, coeff] : p.terms()) {
        if (!FieldTraits<K>::is_rational(coeff)) throw Error("to_unipoly: non-rational coefficient");
        int e = m.exponent(v);
        if (m.degree() != e) throw Error("to_unipoly: extra variables present");
        if ((int)out.c.size() <= e) out.c.resize((size_t)e + 1, Rational(0));
        out.c[(size_t)e] = rational_of(coeff);
    }
    out.trim();
    return out;
}

inline Poly unipoly_to_poly(const UniPoly& u, VarId v) {
    Poly p;
    for (size_t i = 0; i < u.c.size(); ++i)
        if (!u.c[i].is_zero()) p.add_term(Monomial::var(v, (int)i), scalar_rat(u.c[i]));
    return p;
}

namespace detail {
/// Divisors of |n| up to the trial-division cap; complete=false if n has a
/// prime factor beyond the cap that we could not isolate.
inline bool small_divisors(BigInt n, std::vector<BigInt>& out) {
    n = n.abs();
    if (n.is_zero()) return false;
    std::vector<std::pair<BigInt, int>> fac;
    for (long long p = 2; p <= 1000000; p = p == 2 ? 3 : p + 2) {
        BigInt bp(p);
        if (bp * bp > n) break;
        int e = 0;
        while ((n % bp).is_zero()) { n = n / bp; ++e; }
        if (e) fac.push_back({bp, e});
        if (n.is_one()) break;
    }
    bool complete = true;
    if (!n.is_one()) {
        if (n.fits_ll() || n < BigInt("1000000000000"))
            fac.push_back({n, 1});  // remaining cofactor is prime (below cap^2)
        else {
            fac.push_back({n, 1});  // treat the cofactor as atomic; may miss divisors
            complete = false;
        }
    }
    out = {BigInt(1)};
    for (auto& [p, e] : fac) {
        std::vector<BigInt> next;
        BigInt pk(1);
        for (int i = 0; i <= e; ++i) {
            for (auto& d : out) next.push_back(d * pk);
            pk = pk * p;
        }
        out = std::move(next);
    }
    return complete;
}
}  // namespace detail

struct RootSearch {
    std::vector<Rational> roots;  // distinct rational roots
    UniPoly remaining;            // root-free cofactor (squarefree part thereof untouched)
    bool complete = true;         // false if the candidate search was truncated
};

/// All rational roots, removed from the polynomial with multiplicity.
inline RootSearch rational_roots(const UniPoly& p0) {
    RootSearch out;
    if (p0.is_zero()) throw Error("rational_roots: zero polynomial");
    UniPoly p = p0;
    // powers of x
    size_t shift = 0;
    while (shift < p.c.size() && p.c[shift].is_zero()) ++shift;
    if (shift) {
        out.roots.push_back(Rational(0));
        p.c.erase(p.c.begin(), p.c.begin() + (long)shift);
    }
    if (p.degree() < 1) { out.remaining = p; return out; }
    // integer-clear
    BigInt l(1);
    for (auto& r : p.c) l = BigInt::lcm(l, r.den());
    std::vector<BigInt> ic;
    for (auto& r : p.c) ic.push_back(r.num() * (l / r.den()));
    std::vector<BigInt> dp, dq;
    bool c1 = detail::small_divisors(ic.front(), dp);
    bool c2 = detail::small_divisors(ic.back(), dq);
    out.complete = c1 && c2;
    for (auto& num : dp) {
        for (auto& den : dq) {
            for (int sg : {1, -1}) {
                Rational cand(sg > 0 ? num : -num, den);
                if (!p.eval(cand).is_zero()) continue;
                if (std::find(out.roots.begin(), out.roots.end(), cand) != out.roots.end()) continue;
                out.roots.push_back(cand);
                UniPoly lin;
                lin.c = {-cand, Rational(1)};
                UniPoly q, r;
                for (;;) {
                    UniPoly::divmod(p, lin, q, r);
                    if (!r.is_zero()) break;
                    p = q;
                    if (p.degree() < 1) break;
                }
            }
            if (p.degree() < 1) break;
        }
        if (p.degree() < 1) break;
    }
    std::sort(out.roots.begin(), out.roots.end());
    out.remaining = p;
    return out;
}

struct UniFactorization {
    std::vector<std::pair<Rational, int>> roots;  // rational roots with multiplicity
    std::vector<std::pair<UniPoly, int>> quadratics;  // irreducible monic rational quadratics
    std::vector<std::pair<UniPoly, int>> leftover;    // degree >= 3, not split (flagged)
    bool complete = true;
};

namespace detail {
/// Monic rational quadratic factors of a squarefree, root-free polynomial.
/// Solves for x^2 + a x + b dividing p via elimination on the two remainder
/// coefficients; exhaustive for rational (a, b).
inline std::vector<UniPoly> quadratic_factors(const UniPoly& p, bool* complete);
}  // namespace detail

/// Degree-capped factorization over Q: rational roots plus quadratic
/// splitting; anything beyond lands in `leftover` with complete=false.
inline UniFactorization factor_univariate(const UniPoly& p0) {
    UniFactorization out;
    UniPoly p = p0;
    if (p.is_zero()) throw Error("factor_univariate: zero polynomial");
    RootSearch rs = rational_roots(p);
    out.complete = rs.complete;
    for (auto& r : rs.roots) {
        // recover multiplicity from the original
        int mult = 0;
        UniPoly lin;
        lin.c = {-r, Rational(1)};
        UniPoly cur = p0, q, rem;
        for (;;) {
            UniPoly::divmod(cur, lin, q, rem);
            if (!rem.is_zero()) break;
            cur = q;
            ++mult;
        }
        out.roots.push_back({r, mult});
    }
    UniPoly rem = rs.remaining;
    if (rem.degree() >= 2) {
        // work multiplicity-wise on the squarefree layers
        UniPoly sf = rem.squarefree_part();
        bool qcomplete = true;
        auto quads = detail::quadratic_factors(sf, &qcomplete);
        out.complete = out.complete && qcomplete;
        UniPoly cof = rem;
        for (auto& f : quads) {
            int mult = 0;
            UniPoly q, r;
            for (;;) {
                UniPoly::divmod(cof, f, q, r);
                if (!r.is_zero()) break;
                cof = q;
                ++mult;
            }
            if (mult) out.quadratics.push_back({f, mult});
        }
        if (cof.degree() >= 1) {
            UniPoly sfc = cof.squarefree_part();
            int mult = 0;
            UniPoly q, r, cur = cof;
            for (;;) {
                UniPoly::divmod(cur, sfc, q, r);
                if (!r.is_zero()) break;
                cur = q;
                ++mult;
            }
            if (sfc.degree() >= 3 || mult * sfc.degree() != cof.degree()) {
                // mixed multiplicities or an unsplit block: report as-is
                out.leftover.push_back({cof, 1});
                out.complete = false;
            } else {
                out.leftover.push_back({sfc, mult});
                out.complete = false;
            }
        }
    } else if (rem.degree() == 1) {
        throw Error("factor_univariate: linear remainder escaped root search");
    }
    return out;
}

namespace detail {

/// Rational solutions of a system of polynomials in two parameter variables.
/// Sound for zero-dimensional systems; `complete` reports whether the
/// rational candidate search was exhaustive (irrational solutions are
/// ignored, not flagged).
inline bool rational_points_2(const std::vector<PPoly>& sys, VarId u, VarId v,
                              std::vector<std::pair<Rational, Rational>>& pts) {
    bool complete = true;
    std::vector<PPoly> fs;
    for (auto& f : sys)
        if (!f.is_zero()) fs.push_back(f);
    if (fs.empty()) return false;  // infinitely many; caller handles
    // pool of u-only polynomials: direct entries plus pairwise resultants
    std::vector<PPoly> pool;
    std::vector<const PPoly*> withv;
    for (auto& f : fs) {
        if (f.degree(v) <= 0) pool.push_back(f);
        else withv.push_back(&f);
    }
    for (size_t i = 0; i < withv.size(); ++i)
        for (size_t j = i + 1; j < withv.size(); ++j) {
            PPoly r = resultant(*withv[i], *withv[j], v);
            if (!r.is_zero()) pool.push_back(r);
        }
    if (withv.size() == 1 && pool.empty()) return false;  // a single curve: not zero-dimensional
    PPoly r = PPoly::gcd_list(pool);
    if (r.is_zero()) return false;
    if (r.is_constant()) return true;  // no common u
    UniPoly ru = to_unipoly(r, u);
    RootSearch rs = rational_roots(ru);
    complete = rs.complete;
    for (auto& u0 : rs.roots) {
        // specialize and solve in v
        UniPoly g;
        bool first = true;
        bool consistent = true;
        for (auto& f : fs) {
            PPoly fu = f.substitute(u, PPoly::constant(u0));
            if (fu.is_zero()) continue;
            if (fu.is_constant()) { consistent = false; break; }
            UniPoly fv = to_unipoly(fu, v);
            g = first ? fv : UniPoly::gcd(g, fv);
            first = false;
            if (!first && g.degree() == 0) break;
        }
        if (!consistent || first || g.degree() < 1) continue;
        RootSearch rv = rational_roots(g);
        if (!rv.complete) complete = false;
        for (auto& v0 : rv.roots) {
            bool ok = true;
            for (auto& f : fs) {
                PPoly val = f.substitute(u, PPoly::constant(u0)).substitute(v, PPoly::constant(v0));
                if (!val.is_zero()) { ok = false; break; }
            }
            if (ok) pts.push_back({u0, v0});
        }
    }
    return complete;
}

inline std::vector<UniPoly> quadratic_factors(const UniPoly& p, bool* complete) {
    std::vector<UniPoly> out;
    *complete = true;
    UniPoly cur = p;
    while (cur.degree() >= 2) {
        if (cur.degree() == 2) {
            Rational a = cur.c[1] / cur.c[2], b = cur.c[0] / cur.c[2];
            Rational disc = a * a - Rational(4) * b;
            UniPoly f;
            f.c = {b, a, Rational(1)};
            if (!disc.is_square()) out.push_back(f);  // irreducible over Q
            // (a square discriminant cannot occur: rational roots were removed)
            cur = UniPoly::constant(Rational(1));
            break;
        }
        // symbolic division by x^2 + a x + b; remainder coefficients generate the system
        VarId va = param("_qa"), vb = param("_qb");
        PPoly A = PPoly::variable(va), B = PPoly::variable(vb);
        int n = cur.degree();
        // synthetic division over Q[a,b]
        std::vector<PPoly> coef((size_t)n + 1);
        for (int i = 0; i <= n; ++i) coef[(size_t)i] = PPoly::constant(cur.c[(size_t)i]);
        std::vector<PPoly> q((size_t)std::max(0, n - 1));
        for (int i = n; i >= 2; --i) {
            PPoly f = coef[(size_t)i];
            q[(size_t)(i - 2)] = f;
            coef[(size_t)(i - 1)] = coef[(size_t)(i - 1)] - f * A;
            coef[(size_t)(i - 2)] = coef[(size_t)(i - 2)] - f * B;
        }
        std::vector<std::pair<Rational, Rational>> pts;
        bool c = rational_points_2({coef[1], coef[0]}, va, vb, pts);
        *complete = *complete && c;
        bool found = false;
        for (auto& [a0, b0] : pts) {
            UniPoly f;
            f.c = {b0, a0, Rational(1)};
            UniPoly qq, rr;
            UniPoly::divmod(cur, f, qq, rr);
            if (rr.is_zero()) {
                out.push_back(f);
                cur = qq;
                found = true;
                break;
            }
        }
        if (!found) break;
    }
    return out;
}

}  // namespace detail

}  // namespace folia
