#pragma once

#include "folia/fraction.hpp"

#include <vector>

namespace folia {

/// Parameter relation "generator = 0", applied as a rewrite rule for its
/// leading monomial. A set of such relations is reduced to a fixpoint;
/// canonicity is only guaranteed when each generator rewrites a distinct
/// leading power (which covers every relation used here, e.g. k = lambda^(n+1)).
struct Constraint {
    PPoly gen;

    explicit Constraint(PPoly g) : gen(g.canonical()) {
        if (gen.is_zero() || gen.is_constant())
            throw Error("Constraint: generator must be nonconstant in the parameters");
        for (auto& [m, c] : gen.terms())
            for (auto& [v, e] : m.entries())
                if (VarPool::is_coordinate(v))
                    throw Error("Constraint: generators involve parameters only");
    }
};

class ConstraintSet {
public:
    ConstraintSet() = default;
    explicit ConstraintSet(std::vector<Constraint> cs) : cs_(std::move(cs)) {}

    void add(const PPoly& g) { cs_.push_back(Constraint(g)); }
    bool empty() const { return cs_.empty(); }
    const std::vector<Constraint>& generators() const { return cs_; }

    PPoly reduce(const PPoly& p) const {
        if (cs_.empty()) return p;
        PPoly r = p;
        int guard = 0;
        for (;;) {
            if (++guard > 100000) throw Error("ConstraintSet: reduction runaway");
            bool hit = false;
            for (auto& [m, c] : r.terms()) {
                for (auto& con : cs_) {
                    const Monomial& lead = con.gen.leading_monomial();
                    if (!lead.divides(m)) continue;
                    Rational q = c / con.gen.leading_coefficient();
                    r = r - con.gen.mul_term(m.div(lead), q);
                    hit = true;
                    break;
                }
                if (hit) break;
            }
            if (!hit) return r;
        }
    }
    Scalar reduce(const Scalar& s) const {
        if (cs_.empty()) return s;
        PPoly n = reduce(s.num()), d = reduce(s.den());
        if (d.is_zero()) throw Error("ConstraintSet: denominator vanishes modulo constraints");
        return Scalar(n, d);
    }
    Poly reduce(const Poly& p) const {
        if (cs_.empty()) return p;
        Poly r;
        for (auto& [m, c] : p.terms()) r.add_term(m, reduce(c));
        return r;
    }
    RatFunc reduce(const RatFunc& f) const {
        if (cs_.empty()) return f;
        Poly n = reduce(f.num()), d = reduce(f.den());
        if (d.is_zero()) throw Error("ConstraintSet: denominator vanishes modulo constraints");
        return RatFunc(n, d);
    }

    bool is_zero_mod(const PPoly& p) const { return reduce(p).is_zero(); }
    bool is_zero_mod(const Scalar& s) const { return reduce(s.num()).is_zero(); }
    bool is_zero_mod(const Poly& p) const { return reduce(p).is_zero(); }
    bool is_zero_mod(const RatFunc& f) const { return reduce(f.num()).is_zero(); }

    template <class T>
    bool equal_mod(const T& a, const T& b) const { return is_zero_mod(a - b); }

private:
    std::vector<Constraint> cs_;
};

/// gcd of a list of polynomials together with the exact quotients:
/// content * primitive[i] == input[i].
struct ContentSplit {
    Poly content;
    std::vector<Poly> primitives;
};

inline ContentSplit content_and_primitive(const std::vector<Poly>& ps) {
    if (ps.empty()) throw Error("content_and_primitive: empty input");
    bool all_zero = true;
    for (auto& p : ps) all_zero = all_zero && p.is_zero();
    if (all_zero) throw Error("zero form");
    ContentSplit out;
    out.content = Poly::gcd_list(ps);
    out.primitives.reserve(ps.size());
    for (auto& p : ps) out.primitives.push_back(*Poly::div_exact(p, out.content));
    return out;
}

inline std::vector<std::pair<Poly, int>> squarefree_factorization(const Poly& p) {
    return Poly::squarefree(p);
}

inline bool parameter_free(const Poly& p) {
    for (auto& [m, c] : p.terms())
        if (!c.is_constant()) return false;
    return true;
}
inline bool parameter_free(const Scalar& s) { return s.is_constant(); }

inline Rational rational_value(const Scalar& s) {
    if (!s.is_constant()) throw Error("Scalar: not a rational constant");
    if (s.is_zero()) return Rational(0);
    return s.num().constant_value() / s.den().constant_value();
}

/// Splits p into parameter-monomial components: p = sum over alpha of
/// m_alpha(params) * comp_alpha(x,y,z) where each comp has rational
/// coefficients. A rational point kills p identically iff it kills every
/// component.
inline std::vector<std::pair<Monomial, Poly>> parameter_components(const Poly& p) {
    PPoly l = PPoly::from_int(1);
    for (auto& [m, c] : p.terms()) l = PPoly::lcm(l, c.den());
    std::map<Monomial, Poly, GrlexGreater> buckets;
    for (auto& [m, c] : p.terms()) {
        PPoly cleared = c.num() * *PPoly::div_exact(l, c.den());
        for (auto& [pm, r] : cleared.terms()) buckets[pm].add_term(m, scalar_rat(r));
    }
    std::vector<std::pair<Monomial, Poly>> out;
    for (auto& [pm, q] : buckets) out.push_back({pm, q});
    return out;
}

/// Substitutes rational values for (some) parameters.
inline Poly specialize(const Poly& p, const std::map<std::string, Rational>& values) {
    std::map<VarId, PPoly> repl;
    for (auto& [name, v] : values) repl.emplace(param(name), PPoly::constant(v));
    Poly r;
    for (auto& [m, c] : p.terms()) {
        PPoly n = c.num().substitute(repl), d = c.den().substitute(repl);
        if (d.is_zero()) throw Error("specialize: denominator vanishes");
        r.add_term(m, Scalar(n, d));
    }
    return r;
}

inline Poly poly_x() { return Poly::variable(VarPool::X); }
inline Poly poly_y() { return Poly::variable(VarPool::Y); }
inline Poly poly_z() { return Poly::variable(VarPool::Z); }
inline Poly poly_param(const std::string& name) { return Poly::constant(scalar_param(name)); }
inline Poly poly_int(long long v) { return Poly::from_int(v); }

}  // namespace folia
