#include <doctest.h>

#include "helpers.hpp"
#include "oracles.hpp"
#include "slabh/random.hpp"
#include "slabh/slab_dirichlet.hpp"

using namespace slabh;

namespace {

SlabProblem slab(const char* a, const char* b, MultiPoly f0, MultiPoly f1)
{
    return SlabProblem(Q(a), Q(b), std::move(f0), std::move(f1));
}

SlabProblem random_slab(gen::Rng& rng, VarSpace space, int max_deg)
{
    Rational a = gen::any_rational(rng);
    Rational w = gen::rational(rng);
    return SlabProblem(a, a + (w.sign() < 0 ? -w : w), gen::t_free_poly(rng, space, max_deg),
                       gen::t_free_poly(rng, space, max_deg));
}

} // namespace

TEST_CASE("SlabProblem invariants")
{
    CHECK_THROWS_AS(slab("1", "1", P(1, "0"), P(1, "0")), std::invalid_argument);
    CHECK_THROWS_AS(slab("2", "1", P(1, "0"), P(1, "0")), std::invalid_argument);
    CHECK_THROWS_AS(slab("0", "1", P(1, "t"), P(1, "0")), std::invalid_argument);
    CHECK_THROWS_AS(slab("0", "1", P(1, "y1"), P(2, "y1")), DimensionError);
}

TEST_CASE("solve_slab worked examples")
{
    CHECK(solve_slab(slab("0", "1", P(1, "0"), P(1, "y1^2"))) == P(1, "t*y1^2 + 1/3*t - 1/3*t^3"));
    CHECK(solve_slab(slab("0", "1", P(1, "0"), P(1, "0"))).is_zero());
    CHECK(solve_slab(slab("0", "1", P(1, "y1"), P(1, "y1"))) == P(1, "y1"));
    // linear interpolation between constant walls
    CHECK(solve_slab(slab("-1", "3", P(2, "2"), P(2, "6"))) == P(2, "t + 3"));
}

TEST_CASE("solve_slab output checked by evaluation oracle")
{
    gen::Rng rng(21);
    for (int trial = 0; trial < 20; ++trial) {
        VarSpace space(trial % 3 + 1);
        SlabProblem prob = random_slab(rng, space, 6);
        MultiPoly h = solve_slab(prob);
        auto pt = oracle::random_point(rng, space.num_vars());
        CHECK(oracle::laplacian_at(h, pt) == Rational(0));
        CHECK(eval_exact(h, oracle::with_t(pt, prob.a())) == eval_exact(prob.f0(), pt));
        CHECK(eval_exact(h, oracle::with_t(pt, prob.b())) == eval_exact(prob.f1(), pt));
    }
}

TEST_CASE("solve_slab linearity, translation covariance, degree bound")
{
    gen::Rng rng(22);
    for (int trial = 0; trial < 30; ++trial) {
        VarSpace space(trial % 3 + 1);
        SlabProblem p = random_slab(rng, space, 10);
        SlabProblem q(p.a(), p.b(), gen::t_free_poly(rng, space, 10), gen::t_free_poly(rng, space, 10));
        MultiPoly h = solve_slab(p);

        CHECK(verify_boundary(h, p).passed());
        CHECK(solve_slab(SlabProblem(p.a(), p.b(), p.f0() + q.f0(), p.f1() + q.f1())) == h + solve_slab(q));

        Rational s = gen::any_rational(rng);
        CHECK(shift_t(h, -s) == solve_slab(SlabProblem(p.a() + s, p.b() + s, p.f0(), p.f1())));

        CHECK(h.degree() <= std::max(p.f0().degree(), p.f1().degree()) + 1);
    }
}

TEST_CASE("verify_boundary flags perturbations")
{
    SlabProblem prob = slab("0", "1", P(1, "0"), P(1, "y1^2"));
    MultiPoly h = solve_slab(prob);

    auto ok = verify_boundary(h, prob);
    CHECK(ok.passed());
    for (const auto& r : ok.residuals) CHECK(r.value.is_zero());

    auto bumped = verify_boundary(h + P(1, "t^2 - t"), prob);
    CHECK(bumped.status == CheckStatus::fail);
    CHECK(bumped.residuals[2].name == "laplacian");
    CHECK(bumped.residuals[2].value == P(1, "2"));
    CHECK(bumped.residuals[0].value.is_zero());

    auto shifted = verify_boundary(h + P(1, "2*y1 - 1"), prob);
    CHECK(shifted.status == CheckStatus::fail);
    CHECK(shifted.residuals[0].value == P(1, "2*y1 - 1"));
    CHECK(shifted.residuals[1].value == P(1, "2*y1 - 1"));
    CHECK(shifted.residuals[2].value.is_zero());
}

TEST_CASE("even_reflection_identity")
{
    auto odd = even_reflection_identity(P(1, "t*y1^2 + 1/3*t - 1/3*t^3"));
    CHECK(odd.passed());
    CHECK(odd.values.at(0).value.is_zero());

    auto even = even_reflection_identity(P(1, "y1^2 - t^2"));
    CHECK(even.passed());
    CHECK(even.values.at(0).value == P(1, "y1^2 - t^2"));

    auto mixed = even_reflection_identity(P(1, "t*y1 + y1^2 - t^2"));
    CHECK(mixed.passed());
    CHECK(mixed.values.at(0).value == P(1, "y1^2 - t^2"));

    CHECK_THROWS_AS(even_reflection_identity(P(1, "t^2")), std::invalid_argument);
}

TEST_CASE("odd_wall_reflection")
{
    CHECK(odd_wall_reflection(P(1, "t*y1^2 + 1/3*t - 1/3*t^3"), Rational(0)).passed());
    CHECK(odd_wall_reflection(P(1, "t - 1"), Rational(1)).passed());
    CHECK_THROWS_AS(odd_wall_reflection(P(1, "y1^2 - t^2"), Rational(0)), std::invalid_argument);
    CHECK_THROWS_AS(odd_wall_reflection(P(1, "t^3"), Rational(0)), std::invalid_argument);
}

TEST_CASE("zero_data_rigidity")
{
    CHECK(zero_data_rigidity(P(1, "0"), Rational(0), Rational(1)).passed());
    MultiPoly h = solve_slab(slab("-1/2", "3", P(2, "0"), P(2, "0")));
    CHECK(h.is_zero());
    CHECK(zero_data_rigidity(h, Q("-1/2"), Rational(3)).passed());
    auto na = zero_data_rigidity(P(1, "t - 2"), Rational(2), Rational(5));
    CHECK(na.status == CheckStatus::not_applicable);
    CHECK_THROWS_AS(zero_data_rigidity(P(1, "t^2"), Rational(0), Rational(1)), std::invalid_argument);
}

TEST_CASE("reflection identities hold for every slab solution")
{
    gen::Rng rng(23);
    for (int trial = 0; trial < 20; ++trial) {
        VarSpace space(trial % 3 + 1);
        SlabProblem p = random_slab(rng, space, 8);
        MultiPoly h = solve_slab(p);
        CHECK(even_reflection_identity(shift_t(h, p.a())).passed());

        MultiPoly vanishing_at_b = solve_slab(SlabProblem(p.a(), p.b(), p.f0(), MultiPoly(space)));
        CHECK(odd_wall_reflection(vanishing_at_b, p.b()).passed());
    }
}

TEST_CASE("slab problem JSON")
{
    auto j = nlohmann::json::parse(R"({"a": "-1/2", "b": "1", "d": 1,
        "f0": {"d": 1, "terms": []},
        "f1": {"d": 1, "terms": [{"coeff": "1", "exps": [0, 2]}]}})");
    SlabProblem prob = slab_problem_from_json(j);
    CHECK(prob.a() == Q("-1/2"));
    CHECK(prob.f1() == P(1, "y1^2"));
    CHECK(slab_problem_to_json(slab_problem_from_json(slab_problem_to_json(prob))) == slab_problem_to_json(prob));

    j["b"] = "-1";
    CHECK_THROWS_AS(slab_problem_from_json(j), std::invalid_argument);
    j["b"] = 1;
    CHECK_THROWS_AS(slab_problem_from_json(j), FormatError);
}
