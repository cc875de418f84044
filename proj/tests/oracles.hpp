#pragma once

// Test-only checks that avoid the library's derivative, shift and
// Laplacian code: everything here goes through eval_exact and exact linear
// algebra on sampled values.

#include "slabh/poly.hpp"

#include <random>
#include <vector>

namespace oracle {

using slabh::MultiPoly;
using slabh::Rational;

/// Taylor coefficients c_j of x -> p(point with coordinate var = x0 + x),
/// recovered by solving the Vandermonde system on x = 0, 1, ..., n.
inline std::vector<Rational> taylor_along(const MultiPoly& p, std::vector<Rational> point, int var, int n)
{
    const Rational x0 = point[var];
    const int m = n + 1;
    std::vector<std::vector<Rational>> a(m, std::vector<Rational>(m + 1));
    for (int i = 0; i < m; ++i) {
        point[var] = x0 + Rational(i);
        Rational pw(1);
        for (int j = 0; j < m; ++j) {
            a[i][j] = pw;
            pw *= Rational(i);
        }
        a[i][m] = slabh::eval_exact(p, point);
    }
    for (int col = 0; col < m; ++col) {
        int piv = col;
        while (a[piv][col].is_zero()) ++piv;
        std::swap(a[piv], a[col]);
        for (int r = 0; r < m; ++r) {
            if (r == col || a[r][col].is_zero()) continue;
            Rational f = a[r][col] / a[col][col];
            for (int k = col; k <= m; ++k) a[r][k] -= f * a[col][k];
        }
    }
    std::vector<Rational> c(m);
    for (int i = 0; i < m; ++i) c[i] = a[i][m] / a[i][i];
    return c;
}

/// Exact sum of second partials over variables first..d at `point`.
inline Rational laplacian_at(const MultiPoly& p, const std::vector<Rational>& point, int first = 0)
{
    Rational sum(0);
    for (int v = first; v < p.space().num_vars(); ++v) {
        int n = std::max(p.degree_in(v), 2);
        sum += Rational(2) * taylor_along(p, point, v, n)[2];
    }
    return sum;
}

/// Exact first partial in `var` at `point`.
inline Rational partial_at(const MultiPoly& p, const std::vector<Rational>& point, int var)
{
    return taylor_along(p, point, var, std::max(p.degree_in(var), 1))[1];
}

inline std::vector<Rational> random_point(std::mt19937_64& rng, int num_vars)
{
    std::uniform_int_distribution<long> num(-7, 7), den(1, 4);
    std::vector<Rational> pt;
    for (int i = 0; i < num_vars; ++i) pt.emplace_back(num(rng), den(rng));
    return pt;
}

inline std::vector<Rational> with_t(std::vector<Rational> pt, const Rational& t)
{
    pt[0] = t;
    return pt;
}

} // namespace oracle
