#pragma once

#include "slabh/poly.hpp"
#include "slabh/report.hpp"

#include <json.hpp>

namespace slabh {

/// Right-hand side g of h(t+1, y) - h(t, y) = g(t, y); g must be harmonic.
class DiffEqProblem {
public:
    /// Throws std::invalid_argument when Lap g != 0.
    explicit DiffEqProblem(MultiPoly g);

    const MultiPoly& g() const { return g_; }
    int dim() const { return g_.dim(); }

private:
    MultiPoly g_;
};

/// Intermediate polynomials of the construction.
struct DiffEqProvenance {
    MultiPoly g_even;
    MultiPoly g_odd;
    MultiPoly h_even; ///< solve_even(g_even)
    MultiPoly u;      ///< harmonic t-antiderivative of g_odd (even in t)
    MultiPoly H;      ///< solve_even(u)
    MultiPoly h_odd;  ///< dH/dt
};

struct DiffEqSolution {
    MultiPoly h;
    DiffEqProvenance provenance;
};

nlohmann::json diffeq_problem_to_json(const DiffEqProblem& p);
DiffEqProblem diffeq_problem_from_json(const nlohmann::json& j);
nlohmann::json diffeq_solution_to_json(const DiffEqSolution& s);

/// For even harmonic g_e: the slab solution on [0, 1/2] with
/// h(0, y) = -g_e(0, y)/2 and h(1/2, y) = 0.
MultiPoly solve_even(const MultiPoly& g_even);

/// Harmonic u with du/dt = g: u = int_0^t g - G where Lap_y G = f and
/// f = Lap_y(int_0^t g) + dg/dt. If g is odd in t then u is even.
/// Throws std::logic_error if f turns out to depend on t.
MultiPoly harmonic_t_antiderivative(const MultiPoly& g);

/// For odd harmonic g_o: d/dt of solve_even(harmonic_t_antiderivative(g_o)).
MultiPoly solve_odd(const MultiPoly& g_odd);

DiffEqSolution solve(const DiffEqProblem& prob);

/// Residuals h(t+1) - h(t) - g and Lap h.
VerificationReport verify_difference(const MultiPoly& h, const MultiPoly& g);

/// r(y) = h1 - h2 for two solutions of the same equation. Throws
/// std::invalid_argument if either fails verify_difference and
/// std::logic_error if the difference depends on t or is not harmonic.
MultiPoly compare_solutions(const MultiPoly& h1, const MultiPoly& h2, const MultiPoly& g);

} // namespace slabh
