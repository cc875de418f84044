#include "slabh/slab_dirichlet.hpp"

#include "slabh/laplace_ops.hpp"
#include "slabh/poly_io.hpp"

#include <stdexcept>

namespace slabh {

namespace {

void require_harmonic(const MultiPoly& h, const char* what)
{
    MultiPoly lap = laplacian(h);
    if (!lap.is_zero())
        throw std::invalid_argument(std::string(what) + ": input is not harmonic, laplacian = " + to_string(lap));
}

} // namespace

SlabProblem::SlabProblem(Rational a, Rational b, MultiPoly f0, MultiPoly f1)
    : a_(std::move(a)), b_(std::move(b)), f0_(std::move(f0)), f1_(std::move(f1))
{
    if (!(a_ < b_)) throw std::invalid_argument("slab requires a < b, got a=" + a_.to_string() + ", b=" + b_.to_string());
    if (f0_.space() != f1_.space())
        throw DimensionError("boundary data dimensions differ: " + std::to_string(f0_.dim()) + " vs " +
                             std::to_string(f1_.dim()));
    if (!f0_.is_t_free() || !f1_.is_t_free()) throw std::invalid_argument("boundary data must not depend on t");
}

nlohmann::json slab_problem_to_json(const SlabProblem& p)
{
    return {{"a", p.a().to_string()},
            {"b", p.b().to_string()},
            {"d", p.dim()},
            {"f0", poly_to_json(p.f0())},
            {"f1", poly_to_json(p.f1())}};
}

SlabProblem slab_problem_from_json(const nlohmann::json& j)
{
    const int d = read_dimension(j);
    Rational a = read_rational(j, "a");
    Rational b = read_rational(j, "b");
    if (!j.contains("f0") || !j.contains("f1")) throw FormatError("slab problem needs \"f0\" and \"f1\"");
    MultiPoly f0 = poly_from_json(j["f0"]);
    MultiPoly f1 = poly_from_json(j["f1"]);
    if (f0.dim() != d || f1.dim() != d) throw FormatError("boundary data dimension differs from \"d\"");
    return SlabProblem(std::move(a), std::move(b), std::move(f0), std::move(f1));
}

MultiPoly solve_slab(const SlabProblem& prob)
{
    const Rational width = prob.b() - prob.a();
    MultiPoly even = even_ck_extension(prob.f0());
    TraceOperator op(width, prob.dim());
    MultiPoly g = op.invert(prob.f1() - trace(even, width));
    MultiPoly shifted = even + odd_ck_extension(g);
    return shift_t(shifted, -prob.a());
}

VerificationReport verify_boundary(const MultiPoly& h, const SlabProblem& prob)
{
    return timed([&] {
        return VerificationReport::from_residuals(
            "boundary", {{"trace_a", trace(h, prob.a()) - prob.f0()},
                         {"trace_b", trace(h, prob.b()) - prob.f1()},
                         {"laplacian", laplacian(h)}});
    });
}

VerificationReport even_reflection_identity(const MultiPoly& h)
{
    require_harmonic(h, "even_reflection_identity");
    return timed([&] {
        MultiPoly H = even_ck_extension(trace(h, Rational(0)));
        auto r = VerificationReport::from_residuals("even_reflection",
                                                    {{"reflection", h + negate_t(h) - scale(H, Rational(2))}});
        r.values.push_back({"H", H});
        return r;
    });
}

VerificationReport odd_wall_reflection(const MultiPoly& h, const Rational& c)
{
    require_harmonic(h, "odd_wall_reflection");
    MultiPoly wall = trace(h, c);
    if (!wall.is_zero())
        throw std::invalid_argument("odd_wall_reflection: trace at t=" + c.to_string() + " is " + to_string(wall) +
                                    ", not 0");
    return timed([&] {
        MultiPoly p = shift_t(h, c);
        return VerificationReport::from_residuals("odd_wall_reflection", {{"reflection", p + negate_t(p)}});
    });
}

VerificationReport zero_data_rigidity(const MultiPoly& h, const Rational& a, const Rational& b)
{
    require_harmonic(h, "zero_data_rigidity");
    return timed([&] {
        if (!trace(h, a).is_zero() || !trace(h, b).is_zero())
            return VerificationReport::not_applicable("zero_data_rigidity", "nonzero trace on a wall");
        return VerificationReport::from_residuals("zero_data_rigidity", {{"h", h}});
    });
}

} // namespace slabh
