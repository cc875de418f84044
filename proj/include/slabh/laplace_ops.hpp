#pragma once

#include "slabh/poly.hpp"

namespace slabh {

/// Harmonic H with H(0, y) = f(y) and dH/dt(0, y) = 0:
///   H = sum_k (-1)^k t^(2k) / (2k)! * Lap_y^k f.
/// H is even in t. Throws std::invalid_argument if f depends on t.
MultiPoly even_ck_extension(const MultiPoly& f);

/// Harmonic V with V(0, y) = 0 and dV/dt(0, y) = g(y):
///   V = sum_k (-1)^k t^(2k+1) / (2k+1)! * Lap_y^k g.
/// V is odd in t. Throws std::invalid_argument if g depends on t.
MultiPoly odd_ck_extension(const MultiPoly& g);

/// The map L_c : g -> odd_ck_extension(g) evaluated at t = c, acting on
/// t-free polynomials. L_c = c (I + N_c) with N_c nilpotent, so it is
/// invertible for c != 0.
class TraceOperator {
public:
    TraceOperator(Rational c, int d);

    const Rational& height() const { return c_; }
    int dim() const { return d_; }

    MultiPoly apply(const MultiPoly& g) const;
    /// Finite Neumann series g = (1/c) sum_j (-N_c)^j p.
    MultiPoly invert(const MultiPoly& p) const;

private:
    // N_c q = sum_{k>=1} (-1)^k c^(2k) / (2k+1)! Lap_y^k q
    MultiPoly nilpotent_part(const MultiPoly& q) const;
    void check_input(const MultiPoly& p) const;

    Rational c_;
    int d_;
};

MultiPoly trace_operator(const TraceOperator& op, const MultiPoly& g);
MultiPoly invert_trace_operator(const TraceOperator& op, const MultiPoly& p);

/// A particular G(y) with Lap_y G = f, built per homogeneous component f_m
/// with the radial ansatz
///   G_m = sum_k c_k |y|^(2k+2) Lap_y^k f_m,
///   c_0 = 1 / (2(2m+d)),  c_k = -c_{k-1} / (2(k+1)(2m-2k+d)).
/// The result is checked against Lap_y G = f before returning; a mismatch
/// throws std::logic_error. Throws std::invalid_argument if f depends on t.
MultiPoly poisson_solve(const MultiPoly& f);

} // namespace slabh
