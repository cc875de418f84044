#include "slabh/difference_eq.hpp"

#include "slabh/laplace_ops.hpp"
#include "slabh/poly_io.hpp"
#include "slabh/slab_dirichlet.hpp"

#include <stdexcept>

namespace slabh {

namespace {

void require_harmonic(const MultiPoly& g, const char* what)
{
    MultiPoly lap = laplacian(g);
    if (!lap.is_zero())
        throw std::invalid_argument(std::string(what) + ": input is not harmonic, laplacian = " + to_string(lap));
}

} // namespace

DiffEqProblem::DiffEqProblem(MultiPoly g) : g_(std::move(g)) { require_harmonic(g_, "difference equation"); }

nlohmann::json diffeq_problem_to_json(const DiffEqProblem& p) { return {{"d", p.dim()}, {"g", poly_to_json(p.g())}}; }

DiffEqProblem diffeq_problem_from_json(const nlohmann::json& j)
{
    const int d = read_dimension(j);
    if (!j.contains("g")) throw FormatError("difference problem needs \"g\"");
    MultiPoly g = poly_from_json(j["g"]);
    if (g.dim() != d) throw FormatError("\"g\" dimension differs from \"d\"");
    return DiffEqProblem(std::move(g));
}

nlohmann::json diffeq_solution_to_json(const DiffEqSolution& s)
{
    const auto& pv = s.provenance;
    return {{"d", s.h.dim()},
            {"h", poly_to_json(s.h)},
            {"provenance",
             {{"g_even", poly_to_json(pv.g_even)},
              {"g_odd", poly_to_json(pv.g_odd)},
              {"h_even", poly_to_json(pv.h_even)},
              {"u", poly_to_json(pv.u)},
              {"H", poly_to_json(pv.H)},
              {"h_odd", poly_to_json(pv.h_odd)}}}};
}

MultiPoly solve_even(const MultiPoly& g_even)
{
    require_harmonic(g_even, "solve_even");
    if (negate_t(g_even) != g_even) throw std::invalid_argument("solve_even: input is not even in t");
    MultiPoly f0 = scale(trace(g_even, Rational(0)), Rational(-1, 2));
    return solve_slab(SlabProblem(Rational(0), Rational(1, 2), std::move(f0), MultiPoly(g_even.space())));
}

MultiPoly harmonic_t_antiderivative(const MultiPoly& g)
{
    require_harmonic(g, "harmonic_t_antiderivative");
    MultiPoly primitive = integrate_t(g);
    MultiPoly f = laplacian_y(primitive) + derivative(g, 0);
    if (!f.is_t_free()) throw std::logic_error("harmonic_t_antiderivative: f depends on t: " + to_string(f));
    return primitive - poisson_solve(f);
}

MultiPoly solve_odd(const MultiPoly& g_odd)
{
    require_harmonic(g_odd, "solve_odd");
    if (negate_t(g_odd) != -g_odd) throw std::invalid_argument("solve_odd: input is not odd in t");
    return derivative(solve_even(harmonic_t_antiderivative(g_odd)), 0);
}

DiffEqSolution solve(const DiffEqProblem& prob)
{
    auto [g_even, g_odd] = parity_split_t(prob.g());
    MultiPoly h_even = solve_even(g_even);
    MultiPoly u = harmonic_t_antiderivative(g_odd);
    MultiPoly H = solve_even(u);
    MultiPoly h_odd = derivative(H, 0);
    MultiPoly h = h_even + h_odd;
    return {std::move(h),
            {std::move(g_even), std::move(g_odd), std::move(h_even), std::move(u), std::move(H), std::move(h_odd)}};
}

VerificationReport verify_difference(const MultiPoly& h, const MultiPoly& g)
{
    return timed([&] {
        return VerificationReport::from_residuals(
            "difference", {{"difference", shift_t(h, Rational(1)) - h - g}, {"laplacian", laplacian(h)}});
    });
}

MultiPoly compare_solutions(const MultiPoly& h1, const MultiPoly& h2, const MultiPoly& g)
{
    for (const auto* h : {&h1, &h2}) {
        auto rep = verify_difference(*h, g);
        if (!rep.passed()) throw std::invalid_argument("compare_solutions: input fails verification\n" + format_report(rep));
    }
    MultiPoly delta = h1 - h2;
    if (!delta.is_t_free())
        throw std::logic_error("compare_solutions: difference depends on t: " + to_string(delta));
    if (!laplacian_y(delta).is_zero())
        throw std::logic_error("compare_solutions: difference is not harmonic: " + to_string(delta));
    return delta;
}

} // namespace slabh
