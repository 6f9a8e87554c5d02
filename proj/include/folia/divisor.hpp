#pragma once

#include "folia/factor.hpp"

#include <algorithm>

namespace folia {

namespace detail {
inline int scalar_cmp(const Scalar& a, const Scalar& b) {
    auto pcmp = [](const PPoly& p, const PPoly& q) -> int {
        auto i = p.terms().begin();
        auto j = q.terms().begin();
        for (; i != p.terms().end() && j != q.terms().end(); ++i, ++j) {
            int c = Monomial::cmp(i->first, j->first);
            if (c) return c;
            if (i->second != j->second) return i->second < j->second ? -1 : 1;
        }
        if (i != p.terms().end()) return 1;
        if (j != q.terms().end()) return -1;
        return 0;
    };
    int c = pcmp(a.num(), b.num());
    if (c) return c;
    return pcmp(a.den(), b.den());
}
inline int poly_cmp(const Poly& a, const Poly& b) {
    int da = a.total_degree(), db = b.total_degree();
    if (da != db) return da < db ? -1 : 1;
    auto i = a.terms().begin();
    auto j = b.terms().begin();
    for (; i != a.terms().end() && j != b.terms().end(); ++i, ++j) {
        int c = Monomial::cmp(i->first, j->first);
        if (c) return c;
        c = scalar_cmp(i->second, j->second);
        if (c) return c;
    }
    if (i != a.terms().end()) return 1;
    if (j != b.terms().end()) return -1;
    return 0;
}
}  // namespace detail

/// Formal integer combination of canonically normalized components,
/// sorted by (degree, term order). Components are pairwise coprime when
/// built from a factorization.
class Divisor {
public:
    Divisor() = default;

    void add(const Poly& component, int mult) {
        if (mult == 0) return;
        Poly c = component.canonical();
        if (c.is_constant()) throw Error("Divisor: constant component");
        for (auto& [comp, m] : comps_) {
            if (comp == c) {
                m += mult;
                prune();
                return;
            }
        }
        comps_.push_back({c, mult});
        sort();
    }

    const std::vector<std::pair<Poly, int>>& components() const { return comps_; }
    bool is_zero() const { return comps_.empty(); }
    bool effective() const {
        for (auto& [c, m] : comps_)
            if (m < 0) return false;
        return true;
    }
    int degree() const {
        int d = 0;
        for (auto& [c, m] : comps_) d += m * c.total_degree();
        return d;
    }
    int ord(const Poly& component) const {
        Poly c = component.canonical();
        for (auto& [comp, m] : comps_)
            if (comp == c) return m;
        return 0;
    }

    friend Divisor operator+(const Divisor& a, const Divisor& b) {
        Divisor r = a;
        for (auto& [c, m] : b.comps_) r.add(c, m);
        return r;
    }
    friend Divisor operator-(const Divisor& a, const Divisor& b) {
        Divisor r = a;
        for (auto& [c, m] : b.comps_) r.add(c, -m);
        return r;
    }
    friend bool operator==(const Divisor& a, const Divisor& b) {
        if (a.comps_.size() != b.comps_.size()) return false;
        for (size_t i = 0; i < a.comps_.size(); ++i)
            if (a.comps_[i].second != b.comps_[i].second || !(a.comps_[i].first == b.comps_[i].first))
                return false;
        return true;
    }

    std::string str() const {
        if (comps_.empty()) return "0";
        std::string out;
        for (auto& [c, m] : comps_) {
            if (!out.empty()) out += " + ";
            out += std::to_string(m) + "*(" + c.str() + ")";
        }
        return out;
    }

private:
    std::vector<std::pair<Poly, int>> comps_;

    void prune() {
        comps_.erase(std::remove_if(comps_.begin(), comps_.end(),
                                    [](auto& p) { return p.second == 0; }),
                     comps_.end());
    }
    void sort() {
        std::sort(comps_.begin(), comps_.end(), [](auto& a, auto& b) {
            return detail::poly_cmp(a.first, b.first) < 0;
        });
    }
};

struct DivisorFactorization {
    Divisor divisor;                           // certified irreducible components
    std::vector<std::pair<Poly, int>> unsplit; // squarefree parts not certified irreducible
    bool complete = true;
};

namespace detail {

/// Rank of the symmetric matrix of a parameter-free trivariate quadratic form.
inline int quadratic_rank(const Poly& q) {
    const std::array<VarId, 3> vs = {VarPool::X, VarPool::Y, VarPool::Z};
    Rational m[3][3];
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            Monomial mono = Monomial::var(vs[(size_t)i]) * Monomial::var(vs[(size_t)j]);
            Rational c(0);
            for (auto& [mm, cc] : q.terms())
                if (mm == mono) c = rational_value(cc);
            m[i][j] = i == j ? c : c / Rational(2);
        }
    int rank = 0;
    for (int col = 0, row = 0; col < 3 && row < 3; ++col) {
        int piv = -1;
        for (int r = row; r < 3; ++r)
            if (!m[r][col].is_zero()) { piv = r; break; }
        if (piv < 0) continue;
        std::swap(m[piv], m[row]);
        for (int r = row + 1; r < 3; ++r) {
            Rational f = m[r][col] / m[row][col];
            for (int c2 = 0; c2 < 3; ++c2) m[r][c2] = m[r][c2] - f * m[row][c2];
        }
        ++row;
        ++rank;
    }
    return rank;
}

/// Monic rational linear forms dividing a parameter-free homogeneous q, found
/// by requiring q to vanish identically on the substituted line.
inline std::vector<Poly> linear_factors(Poly& q, bool* complete) {
    std::vector<Poly> found;
    // shape x + b y + g z
    for (;;) {
        if (!q.contains_var(VarPool::X)) break;
        VarId vb = param("_lb"), vg = param("_lg");
        Poly value = -(Poly::constant(scalar_param("_lb")) * poly_y() +
                       Poly::constant(scalar_param("_lg")) * poly_z());
        Poly r = q.substitute(VarPool::X, value);
        std::vector<PPoly> sys;
        for (auto& [m, c] : r.terms()) {
            if (!c.is_polynomial()) throw Error("linear_factors: unexpected fraction");
            sys.push_back(c.num());
        }
        if (sys.empty()) break;
        std::vector<std::pair<Rational, Rational>> pts;
        bool c = rational_points_2(sys, vb, vg, pts);
        *complete = *complete && c;
        bool divided = false;
        for (auto& [b0, g0] : pts) {
            Poly line = poly_x() + poly_y().scaled(scalar_rat(b0)) + poly_z().scaled(scalar_rat(g0));
            auto quo = Poly::div_exact(q, line);
            if (quo) {
                q = *quo;
                found.push_back(line);
                divided = true;
                break;
            }
        }
        if (!divided) break;
    }
    // shape y + g z
    for (;;) {
        if (!q.contains_var(VarPool::Y)) break;
        Poly r = q.substitute(VarPool::Y, -(Poly::constant(scalar_param("_lg")) * poly_z()));
        std::vector<UniPoly> sys;
        bool any = false;
        UniPoly g;
        for (auto& [m, c] : r.terms()) {
            if (!c.is_polynomial()) throw Error("linear_factors: unexpected fraction");
            UniPoly u = to_unipoly(c.num(), param("_lg"));
            g = any ? UniPoly::gcd(g, u) : u;
            any = true;
        }
        if (!any || g.degree() < 1) break;
        RootSearch rs = rational_roots(g);
        *complete = *complete && rs.complete;
        bool divided = false;
        for (auto& g0 : rs.roots) {
            Poly line = poly_y() + poly_z().scaled(scalar_rat(g0));
            auto quo = Poly::div_exact(q, line);
            if (quo) {
                q = *quo;
                found.push_back(line);
                divided = true;
                break;
            }
        }
        if (!divided) break;
    }
    return found;
}

}  // namespace detail

/// Splits a squarefree homogeneous polynomial into certified irreducible
/// components within the degree cap. Parameter-dependent squarefree factors
/// are kept whole (they are single components over Q(parameters)).
inline void split_squarefree(const Poly& input, int mult, int degree_cap,
                             DivisorFactorization& out) {
    Poly q = input.canonical();
    // coordinate components first
    for (VarId v : {VarPool::X, VarPool::Y, VarPool::Z}) {
        auto quo = Poly::div_exact(q, Poly::variable(v));
        if (quo) {
            out.divisor.add(Poly::variable(v), mult);
            q = *quo;
        }
    }
    if (q.is_constant()) return;
    if (!parameter_free(q)) {
        out.divisor.add(q, mult);  // single component over Q(parameters)
        return;
    }
    if (q.total_degree() > degree_cap) {
        out.unsplit.push_back({q, mult});
        out.complete = false;
        return;
    }
    auto vs = q.vars();
    if (vs.size() == 2) {
        // binary form: dehomogenize the lower-priority variable and factor
        VarId hi = *vs.begin(), lo = *std::next(vs.begin());
        Poly dehom = q.substitute(lo, poly_int(1));
        UniPoly u = to_unipoly(dehom, hi);
        UniFactorization f = factor_univariate(u);
        out.complete = out.complete && f.complete;
        int deg_used = 0;
        for (auto& [root, m] : f.roots) {
            Poly lin = Poly::variable(hi).scaled(scalar_rat(Rational(root.den()))) -
                       Poly::variable(lo).scaled(scalar_rat(Rational(root.num())));
            out.divisor.add(lin, mult * m);
            deg_used += m;
        }
        for (auto& [quad, m] : f.quadratics) {
            Poly h;
            for (int i = 0; i <= 2; ++i)
                if (!quad.c[(size_t)i].is_zero())
                    h.add_term(Monomial::var(hi, i) * Monomial::var(lo, 2 - i), scalar_rat(quad.c[(size_t)i]));
            out.divisor.add(h, mult * m);
            deg_used += 2 * m;
        }
        for (auto& [left, m] : f.leftover) {
            Poly h;
            int dl = left.degree();
            for (int i = 0; i <= dl; ++i)
                if (!left.c[(size_t)i].is_zero())
                    h.add_term(Monomial::var(hi, i) * Monomial::var(lo, dl - i), scalar_rat(left.c[(size_t)i]));
            out.unsplit.push_back({h, mult * m});
            deg_used += dl * m;
        }
        if (deg_used != q.total_degree())
            throw Error("split_squarefree: binary form degree mismatch");
        return;
    }
    // trivariate: peel rational lines, then decide quadratics by rank
    bool complete = true;
    auto lines = detail::linear_factors(q, &complete);
    out.complete = out.complete && complete;
    for (auto& l : lines) out.divisor.add(l, mult);
    if (q.is_constant()) return;
    vs = q.vars();
    if (vs.size() <= 2) {
        split_squarefree(q, mult, degree_cap, out);
        return;
    }
    if (q.total_degree() == 2) {
        // no rational lines divide it; rank distinguishes nothing further over Q
        out.divisor.add(q, mult);
        return;
    }
    out.unsplit.push_back({q.canonical(), mult});
    out.complete = false;
}

/// Divisor of a polynomial: squarefree decomposition then capped
/// irreducible splitting.
inline DivisorFactorization factor_divisor(const Poly& p, int degree_cap = 6) {
    DivisorFactorization out;
    if (p.is_zero()) throw Error("factor_divisor: zero polynomial");
    if (p.is_constant()) return out;
    for (auto& [f, m] : squarefree_factorization(p)) split_squarefree(f, m, degree_cap, out);
    return out;
}

}  // namespace folia
