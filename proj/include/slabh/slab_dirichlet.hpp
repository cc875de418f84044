#pragma once

#include "slabh/poly.hpp"
#include "slabh/report.hpp"

#include <json.hpp>

namespace slabh {

/// Dirichlet data on the slab (a, b) x R^d: h(a, y) = f0(y), h(b, y) = f1(y).
class SlabProblem {
public:
    /// Throws std::invalid_argument unless a < b, f0 and f1 are t-free and
    /// share a dimension.
    SlabProblem(Rational a, Rational b, MultiPoly f0, MultiPoly f1);

    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }
    const MultiPoly& f0() const { return f0_; }
    const MultiPoly& f1() const { return f1_; }
    int dim() const { return f0_.dim(); }

private:
    Rational a_, b_;
    MultiPoly f0_, f1_;
};

/// {"a": "0", "b": "1", "d": 1, "f0": <poly>, "f1": <poly>}
nlohmann::json slab_problem_to_json(const SlabProblem& p);
SlabProblem slab_problem_from_json(const nlohmann::json& j);

/// Harmonic polynomial with the prescribed traces. In s = t - a:
/// h = E[f0] + V[g] with g = L_{b-a}^{-1}(f1 - E[f0](b-a)), where E and V
/// are the even and odd Cauchy-Kovalevskaya extensions. deg h is at most
/// max(deg f0, deg f1) + 1.
MultiPoly solve_slab(const SlabProblem& prob);

/// Residuals trace(h,a) - f0, trace(h,b) - f1 and Lap h.
VerificationReport verify_boundary(const MultiPoly& h, const SlabProblem& prob);

/// h(t,y) + h(-t,y) - 2 E[h(0,.)](t,y) == 0 for harmonic h.
/// Throws std::invalid_argument if h is not harmonic.
VerificationReport even_reflection_identity(const MultiPoly& h);

/// For harmonic h vanishing on t = c: p(t) = h(c+t) satisfies p(t) + p(-t) == 0.
/// Throws std::invalid_argument if h is not harmonic or h(c, .) != 0.
VerificationReport odd_wall_reflection(const MultiPoly& h, const Rational& c);

/// A harmonic polynomial with zero traces at a and b must be zero.
/// Not applicable when a trace is nonzero. Throws on non-harmonic h.
VerificationReport zero_data_rigidity(const MultiPoly& h, const Rational& a, const Rational& b);

} // namespace slabh
