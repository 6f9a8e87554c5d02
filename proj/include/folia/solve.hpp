#pragma once

#include "folia/factor.hpp"
#include "folia/plane.hpp"
#include "folia/resultant.hpp"

namespace folia {

namespace detail {

/// Parameter-split restriction: rational-coefficient polynomials whose
/// simultaneous vanishing is equivalent to the identical vanishing of the
/// inputs for all parameter values.
inline std::vector<Poly> rational_system(const std::vector<Poly>& fs) {
    std::vector<Poly> out;
    for (auto& f : fs) {
        if (f.is_zero()) continue;
        for (auto& [pm, comp] : parameter_components(f)) out.push_back(comp);
    }
    return out;
}

struct Chart2D {
    std::vector<std::pair<Rational, Rational>> points;
    std::vector<Poly> unsolved;
    bool complete = true;
};

/// Common rational zeros of a list of polynomials in (x, y) with rational
/// coefficients; resultant elimination plus back-substitution filtering.
inline Chart2D common_zeros_2d(std::vector<Poly> fs, int degree_cap) {
    Chart2D out;
    std::vector<Poly> sys;
    for (auto& f : fs)
        if (!f.is_zero()) sys.push_back(f);
    if (sys.empty()) {
        out.complete = false;
        return out;
    }
    for (auto& f : sys)
        if (f.total_degree() > degree_cap) {
            out.unsolved = sys;
            out.complete = false;
            return out;
        }
    Poly g = Poly::gcd_list(sys);
    if (!g.is_constant()) {
        out.unsolved.push_back(g);
        out.complete = false;
        for (auto& f : sys) f = *Poly::div_exact(f, g);
        sys.erase(std::remove_if(sys.begin(), sys.end(), [](const Poly& p) { return p.is_constant(); }),
                  sys.end());
        if (sys.empty()) return out;
    }
    std::vector<Poly> pool;
    std::vector<Poly> withy;
    for (auto& f : sys) {
        if (f.degree(VarPool::Y) <= 0) pool.push_back(f);
        else withy.push_back(f);
    }
    for (size_t i = 0; i < withy.size(); ++i)
        for (size_t j = i + 1; j < withy.size(); ++j) {
            Poly r = resultant(withy[i], withy[j], VarPool::Y);
            if (!r.is_zero()) pool.push_back(r);
        }
    if (pool.empty()) {
        out.unsolved = sys;
        out.complete = false;
        return out;
    }
    Poly rx = Poly::gcd_list(pool);
    if (rx.is_constant()) return out;  // no common x
    UniPoly ru = to_unipoly(rx, VarPool::X);
    RootSearch rs = rational_roots(ru);
    if (!rs.complete) out.complete = false;
    if (rs.remaining.degree() >= 1) {
        out.unsolved.push_back(unipoly_to_poly(rs.remaining, VarPool::X));
        out.complete = false;
    }
    for (auto& x0 : rs.roots) {
        UniPoly gy;
        bool first = true, inconsistent = false;
        for (auto& f : sys) {
            Poly fy = f.substitute(VarPool::X, Poly::constant(scalar_rat(x0)));
            if (fy.is_zero()) continue;
            if (fy.is_constant()) { inconsistent = true; break; }
            UniPoly u = to_unipoly(fy, VarPool::Y);
            gy = first ? u : UniPoly::gcd(gy, u);
            first = false;
        }
        if (inconsistent) continue;
        if (first) {
            // the whole fiber x = x0 is singular
            out.unsolved.push_back(poly_x() - Poly::constant(scalar_rat(x0)));
            out.complete = false;
            continue;
        }
        if (gy.degree() < 1) continue;
        RootSearch rys = rational_roots(gy);
        if (!rys.complete) out.complete = false;
        if (rys.remaining.degree() >= 1) {
            out.unsolved.push_back(poly_x() - Poly::constant(scalar_rat(x0)));  // marker for the fiber
            out.complete = false;
        }
        for (auto& y0 : rys.roots) {
            bool ok = true;
            for (auto& f : sys) {
                std::map<VarId, Scalar> vals = {{VarPool::X, scalar_rat(x0)}, {VarPool::Y, scalar_rat(y0)}};
                if (!f.evaluate(vals).is_zero()) { ok = false; break; }
            }
            if (ok) out.points.push_back({x0, y0});
        }
    }
    return out;
}

}  // namespace detail

struct SingularLocus {
    std::vector<ProjPoint> points;                      // rational singular points
    std::vector<std::pair<std::string, Poly>> unsolved; // chart label + generator
    bool complete = true;
};

/// Common projective zeros of the coefficients of a primitive form that are
/// rational over Q (after parameter splitting); non-rational parts are
/// returned as unsolved generators.
inline SingularLocus singular_locus(const ProjForm& w, int degree_cap = 6) {
    if (!w.is_primitive()) throw Error("singular_locus: reduce first");
    SingularLocus out;
    // affine chart z = 1
    std::vector<Poly> fs;
    for (int i = 0; i < 3; ++i) fs.push_back(w.coeff(i).substitute(VarPool::Z, poly_int(1)));
    auto chart = detail::common_zeros_2d(detail::rational_system(fs), degree_cap);
    out.complete = chart.complete;
    for (auto& g : chart.unsolved) out.unsolved.push_back({"z=1", g});
    for (auto& [x0, y0] : chart.points) out.points.push_back(ProjPoint::of(x0, y0, Rational(1)));
    // line z = 0, y = 1
    std::vector<Poly> gs;
    for (int i = 0; i < 3; ++i)
        gs.push_back(w.coeff(i).substitute(VarPool::Z, Poly::zero()).substitute(VarPool::Y, poly_int(1)));
    UniPoly gx;
    bool first = true, none = false;
    for (auto& g : detail::rational_system(gs)) {
        if (g.is_constant()) { none = true; break; }
        UniPoly u = to_unipoly(g, VarPool::X);
        gx = first ? u : UniPoly::gcd(gx, u);
        first = false;
    }
    if (!none && !first) {
        if (gx.degree() >= 1) {
            RootSearch rs = rational_roots(gx);
            if (!rs.complete) out.complete = false;
            if (rs.remaining.degree() >= 1) {
                out.unsolved.push_back({"z=0", unipoly_to_poly(rs.remaining, VarPool::X)});
                out.complete = false;
            }
            for (auto& x0 : rs.roots) out.points.push_back(ProjPoint::of(x0, Rational(1), Rational(0)));
        }
    } else if (!none && first) {
        out.unsolved.push_back({"z=0", poly_z()});
        out.complete = false;
    }
    // corner [1:0:0]
    std::map<VarId, Scalar> corner = {{VarPool::X, scalar_int(1)}, {VarPool::Y, Scalar()}, {VarPool::Z, Scalar()}};
    bool corner_zero = true;
    for (int i = 0; i < 3; ++i) corner_zero = corner_zero && w.coeff(i).evaluate(corner).is_zero();
    if (corner_zero) out.points.push_back(ProjPoint::of(1, 0, 0));
    std::sort(out.points.begin(), out.points.end());
    return out;
}

namespace detail {

/// Univariate polynomials over Q[x]/(m) with dynamic splitting: decides
/// whether the system acquires a common y-root above some root of m.
struct ModBranch {
    UniPoly m;
    std::vector<std::vector<UniPoly>> polys;  // ascending y-coefficients
};

inline UniPoly mod_reduce(const UniPoly& a, const UniPoly& m) {
    UniPoly q, r;
    UniPoly::divmod(a, m, q, r);
    return r;
}

inline bool common_root_above(const UniPoly& m0, const std::vector<std::vector<UniPoly>>& polys0) {
    std::vector<ModBranch> stack{{m0, polys0}};
    while (!stack.empty()) {
        ModBranch br = std::move(stack.back());
        stack.pop_back();
        if (br.m.degree() < 1) continue;
        // reduce coefficients, drop identically-zero polynomials
        std::vector<std::vector<UniPoly>> ps;
        bool split = false;
        for (auto& p : br.polys) {
            std::vector<UniPoly> rp;
            for (auto& c : p) rp.push_back(mod_reduce(c, br.m));
            while (!rp.empty() && rp.back().is_zero()) rp.pop_back();
            if (!rp.empty()) ps.push_back(std::move(rp));
        }
        if (ps.empty()) return true;  // every poly vanishes on the whole fiber
        // Euclidean gcd in y over Q[x]/(m), splitting on zero divisors
        std::vector<UniPoly> g = ps[0];
        for (size_t k = 1; k < ps.size() && !split; ++k) {
            std::vector<UniPoly> a = g, b = ps[k];
            for (;;) {
                while (!b.empty() && b.back().is_zero()) b.pop_back();
                if (b.empty()) break;
                if (a.size() < b.size()) std::swap(a, b);
                if (b.empty()) break;
                // invert leading coefficient of b modulo m
                auto [gg, s, t] = UniPoly::ext_gcd(b.back(), br.m);
                if (gg.degree() >= 1) {
                    if (gg.degree() == br.m.degree()) {
                        // leading coefficient is 0 mod m: drop it
                        b.pop_back();
                        continue;
                    }
                    UniPoly q, rest;
                    UniPoly::divmod(br.m, gg, q, rest);
                    stack.push_back({gg, br.polys});
                    stack.push_back({q, br.polys});
                    split = true;
                    break;
                }
                // b is monic-izable: a = a mod b
                std::vector<UniPoly> r = a;
                while (r.size() >= b.size()) {
                    while (!r.empty() && r.back().is_zero()) r.pop_back();
                    if (r.size() < b.size()) break;
                    UniPoly f = mod_reduce(r.back() * s, br.m);  // r_lead / b_lead
                    size_t off = r.size() - b.size();
                    for (size_t i = 0; i < b.size(); ++i)
                        r[off + i] = mod_reduce(r[off + i] - f * b[i], br.m);
                    if (!r.empty()) r.pop_back();
                }
                a = b;
                b = r;
            }
            if (!split) g = a;
        }
        if (split) continue;
        while (!g.empty() && g.back().is_zero()) g.pop_back();
        if (g.empty()) return true;  // gcd vanished: whole fiber in common
        if (g.size() >= 2) {
            // positive y-degree: a common root exists above every root of m
            // where the leading coefficient stays invertible
            auto [gl, s2, t2] = UniPoly::ext_gcd(g.back(), br.m);
            if (gl.degree() >= 1) {
                UniPoly q, rest;
                UniPoly::divmod(br.m, gl, q, rest);
                stack.push_back({gl, br.polys});
                stack.push_back({q, br.polys});
                continue;
            }
            return true;
        }
        // constant-in-y gcd c(x): the system is coprime above roots where c is
        // invertible; re-examine the roots of gcd(c, m) separately
        auto [gg, s3, t3] = UniPoly::ext_gcd(g[0], br.m);
        if (gg.degree() >= 1) {
            UniPoly q, rest;
            UniPoly::divmod(br.m, gg, q, rest);
            stack.push_back({gg, br.polys});
            stack.push_back({q, br.polys});
        }
    }
    return false;
}

}  // namespace detail

inline UniPoly to_unipoly_if_rational(const Poly& p, VarId v) {
    if (!parameter_free(p)) return UniPoly::zero();
    for (auto& [m, c] : p.terms())
        if (m.degree() != m.exponent(v)) return UniPoly::zero();
    return to_unipoly(p, v);
}

enum class Holomorphy { Holomorphic, NotHolomorphic, Undecided };

struct HolomorphyReport {
    Holomorphy verdict = Holomorphy::Undecided;
    std::optional<ProjPoint> base_point;  // a rational witness when available
    std::vector<std::string> notes;
};

/// Decides whether the three components share a projective zero over C.
/// With symbolic parameters the verdict is generic (noted); the cap bounds
/// the elimination degree.
inline HolomorphyReport is_holomorphic(const ProjMap& phi, int degree_cap = 6) {
    HolomorphyReport rep;
    bool params = !(parameter_free(phi.p()) && parameter_free(phi.q()) && parameter_free(phi.r()));
    if (params) rep.notes.push_back("symbolic parameters: verdict generic in the parameters");
    if (phi.degree() > degree_cap) {
        rep.notes.push_back("degree cap exceeded");
        return rep;
    }
    // corner [1:0:0]
    std::map<VarId, Scalar> corner = {{VarPool::X, scalar_int(1)}, {VarPool::Y, Scalar()}, {VarPool::Z, Scalar()}};
    bool corner_zero = true;
    for (int i = 0; i < 3; ++i) corner_zero = corner_zero && phi.component(i).evaluate(corner).is_zero();
    if (corner_zero) {
        rep.verdict = Holomorphy::NotHolomorphic;
        rep.base_point = ProjPoint::of(1, 0, 0);
        return rep;
    }
    // line z = 0, y = 1: univariate system over the parameter field
    {
        bool nonzero_const = false, first = true;
        Poly g;
        for (int i = 0; i < 3; ++i) {
            Poly f = phi.component(i).substitute(VarPool::Z, Poly::zero()).substitute(VarPool::Y, poly_int(1));
            if (f.is_zero()) continue;
            if (f.is_constant()) { nonzero_const = true; break; }
            g = first ? f : Poly::gcd(g, f);
            first = false;
        }
        if (!nonzero_const) {
            if (first) {
                rep.verdict = Holomorphy::NotHolomorphic;  // whole line of base points
                rep.notes.push_back("components vanish on z=0");
                return rep;
            }
            if (!g.is_constant()) {
                rep.verdict = Holomorphy::NotHolomorphic;
                UniPoly u = to_unipoly_if_rational(g, VarPool::X);
                RootSearch rs = u.is_zero() ? RootSearch{} : rational_roots(u);
                if (!rs.roots.empty()) rep.base_point = ProjPoint::of(rs.roots.front(), Rational(1), Rational(0));
                else rep.notes.push_back("base point on z=0 with non-rational coordinates");
                return rep;
            }
        }
    }
    // affine chart z = 1
    std::vector<Poly> fs;
    for (int i = 0; i < 3; ++i) fs.push_back(phi.component(i).substitute(VarPool::Z, poly_int(1)));
    Poly g3 = Poly::gcd_list(fs);
    if (!g3.is_constant()) {
        rep.verdict = Holomorphy::NotHolomorphic;
        rep.notes.push_back("components share a curve in z=1");
        return rep;
    }
    std::vector<Poly> pool, withy;
    for (auto& f : fs) {
        if (f.is_zero()) continue;
        if (f.degree(VarPool::Y) <= 0) pool.push_back(f);
        else withy.push_back(f);
    }
    for (size_t i = 0; i < withy.size(); ++i)
        for (size_t j = i + 1; j < withy.size(); ++j) {
            Poly r = resultant(withy[i], withy[j], VarPool::Y);
            if (!r.is_zero()) pool.push_back(r);
        }
    if (pool.empty()) {
        rep.notes.push_back("elimination degenerate");
        return rep;
    }
    Poly rx = Poly::gcd_list(pool);
    if (rx.is_constant()) {
        rep.verdict = Holomorphy::Holomorphic;
        return rep;
    }
    if (!parameter_free(rx)) {
        rep.notes.push_back("parameter-dependent elimination result");
        return rep;  // undecided
    }
    UniPoly ru = to_unipoly(rx, VarPool::X);
    RootSearch rs = rational_roots(ru);
    for (auto& x0 : rs.roots) {
        Poly gy;
        bool first = true, inconsistent = false;
        for (auto& f : fs) {
            Poly fy = f.substitute(VarPool::X, Poly::constant(scalar_rat(x0)));
            if (fy.is_zero()) continue;
            if (fy.is_constant()) { inconsistent = true; break; }  // generically nonzero
            gy = first ? fy : Poly::gcd(gy, fy);
            first = false;
        }
        if (inconsistent) continue;
        if (first || !gy.is_constant()) {
            rep.verdict = Holomorphy::NotHolomorphic;
            if (!first) {
                UniPoly u = to_unipoly_if_rational(gy, VarPool::Y);
                RootSearch rys = u.is_zero() ? RootSearch{} : rational_roots(u);
                if (!rys.roots.empty())
                    rep.base_point = ProjPoint::of(x0, rys.roots.front(), Rational(1));
            }
            if (!rep.base_point) rep.notes.push_back("base point above x=" + x0.str());
            return rep;
        }
    }
    if (!rs.complete) {
        rep.notes.push_back("root search truncated");
        return rep;
    }
    UniPoly leftover = rs.remaining.squarefree_part();
    if (leftover.degree() >= 1) {
        if (!parameter_free(fs[0]) || !parameter_free(fs[1]) || !parameter_free(fs[2])) {
            rep.notes.push_back("non-rational elimination roots with parameters");
            return rep;
        }
        std::vector<std::vector<UniPoly>> coefs;
        for (auto& f : fs) {
            std::vector<UniPoly> cl;
            for (auto& c : f.collect(VarPool::Y)) cl.push_back(to_unipoly(c, VarPool::X));
            coefs.push_back(std::move(cl));
        }
        if (detail::common_root_above(leftover, coefs)) {
            rep.verdict = Holomorphy::NotHolomorphic;
            rep.notes.push_back("base point with non-rational coordinates");
            return rep;
        }
    }
    rep.verdict = Holomorphy::Holomorphic;
    return rep;
}

}  // namespace folia
