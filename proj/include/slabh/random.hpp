#pragma once

#include "slabh/poly.hpp"

#include <random>

namespace slabh::gen {

using Rng = std::mt19937_64;

/// Small nonzero rational p/q with |p| <= max_num, 1 <= q <= max_den.
Rational rational(Rng& rng, long max_num = 9, long max_den = 5);
/// Rational that may be zero.
Rational any_rational(Rng& rng, long max_num = 9, long max_den = 5);

/// Up to `max_terms` random terms of total degree <= max_deg.
MultiPoly poly(Rng& rng, VarSpace space, int max_deg, int max_terms = 8);
/// Same, with zero t-exponent everywhere.
MultiPoly t_free_poly(Rng& rng, VarSpace space, int max_deg, int max_terms = 8);
/// E[f] + V[p] for random t-free f (deg <= max_deg) and p (deg <= max_deg - 1).
MultiPoly harmonic_poly(Rng& rng, VarSpace space, int max_deg, int max_terms = 6);
/// t-free polynomial r(y) with Lap_y r = 0.
MultiPoly t_free_harmonic_poly(Rng& rng, VarSpace space, int max_deg, int max_terms = 4);

} // namespace slabh::gen
