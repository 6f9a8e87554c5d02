#pragma once

#include "folia/fraction.hpp"

namespace folia {

/// Fraction-free determinant (Bareiss). Entries in any exact domain with
/// exact division; exact divisions are guaranteed by the recurrence.
template <class P>
P bareiss_determinant(std::vector<std::vector<P>> m) {
    const size_t n = m.size();
    if (n == 0) return P::from_int(1);
    for (auto& row : m)
        if (row.size() != n) throw Error("bareiss: matrix not square");
    int sign = 1;
    P prev = P::from_int(1);
    for (size_t k = 0; k + 1 < n; ++k) {
        size_t piv = k;
        while (piv < n && m[piv][k].is_zero()) ++piv;
        if (piv == n) return P::zero();
        if (piv != k) {
            std::swap(m[piv], m[k]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j) {
                P num = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                auto q = P::div_exact(num, prev);
                if (!q) throw Error("bareiss: non-exact division");
                m[i][j] = *q;
            }
            m[i][k] = P::zero();
        }
        prev = m[k][k];
    }
    P det = m[n - 1][n - 1];
    return sign < 0 ? -det : det;
}

/// Resultant with respect to v via the Sylvester matrix.
template <class K>
MPoly<K> resultant(const MPoly<K>& f, const MPoly<K>& g, VarId v) {
    using P = MPoly<K>;
    if (f.is_zero() || g.is_zero()) return P::zero();
    int m = f.degree(v), n = g.degree(v);
    if (m == 0 && n == 0) return P::from_int(1);
    if (m == 0) return f.pow(n);
    if (n == 0) return g.pow(m);
    auto fc = f.collect(v), gc = g.collect(v);
    const int N = m + n;
    std::vector<std::vector<P>> s((size_t)N, std::vector<P>((size_t)N, P::zero()));
    for (int r = 0; r < n; ++r)
        for (int i = 0; i <= m; ++i) s[(size_t)r][(size_t)(r + i)] = fc[(size_t)(m - i)];
    for (int r = 0; r < m; ++r)
        for (int i = 0; i <= n; ++i) s[(size_t)(n + r)][(size_t)(r + i)] = gc[(size_t)(n - i)];
    return bareiss_determinant(std::move(s));
}

}  // namespace folia
