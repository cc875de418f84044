#include <doctest.h>

#include "helpers.hpp"
#include "slabh/complex_oracle.hpp"
#include "slabh/difference_eq.hpp"
#include "slabh/random.hpp"

using namespace slabh;

namespace {

ComplexRational cr(long re, long im = 0) { return {Rational(re), Rational(im)}; }

// B_n(x) = sum_k C(n,k) B_k x^(n-k) with Bernoulli numbers from
// sum_{k<=m} C(m+1,k) B_k = 0.
ComplexPoly bernoulli_from_numbers(unsigned n)
{
    auto binom = [](unsigned a, unsigned b) {
        mpz_class r;
        mpz_bin_uiui(r.get_mpz_t(), a, b);
        return Rational(mpq_class(r));
    };
    std::vector<Rational> B{Rational(1)};
    for (unsigned m = 1; m <= n; ++m) {
        Rational s(0);
        for (unsigned k = 0; k < m; ++k) s += binom(m + 1, k) * B[k];
        B.push_back(-s / Rational(static_cast<long>(m + 1)));
    }
    std::vector<Rational> c(n + 1);
    for (unsigned k = 0; k <= n; ++k) c[n - k] = binom(n, k) * B[k];
    return ComplexPoly::real(c);
}

ComplexPoly monomial(unsigned n, ComplexRational c = cr(1))
{
    std::vector<ComplexRational> v(n + 1);
    v[n] = c;
    return ComplexPoly(v);
}

} // namespace

TEST_CASE("bernoulli polynomials")
{
    CHECK(bernoulli_polynomial(0) == ComplexPoly::real({Rational(1)}));
    CHECK(bernoulli_polynomial(1) == ComplexPoly::real({Rational(-1, 2), Rational(1)}));
    CHECK(bernoulli_polynomial(2) == ComplexPoly::real({Rational(1, 6), Rational(-1), Rational(1)}));
    CHECK(bernoulli_polynomial(4) == ComplexPoly::real({Rational(-1, 30), Rational(0), Rational(1), Rational(-2), Rational(1)}));
    for (unsigned n = 0; n <= 20; ++n) {
        CHECK(bernoulli_polynomial(n) == bernoulli_from_numbers(n));
        ComplexPoly b = bernoulli_polynomial(n + 1);
        CHECK(shift(b, cr(1)) - b == monomial(n, cr(static_cast<long>(n + 1))));
    }
}

TEST_CASE("solve_complex_difference")
{
    CHECK(solve_complex_difference(ComplexPoly::real({Rational(1)})) ==
          ComplexPoly::real({Rational(-1, 2), Rational(1)}));
    CHECK(solve_complex_difference(ComplexPoly()).is_zero());
    CHECK(solve_complex_difference(monomial(2)) ==
          ComplexPoly::real({Rational(0), Rational(1, 6), Rational(-1, 2), Rational(1, 3)}));

    gen::Rng rng(41);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<ComplexRational> c;
        for (int n = 0; n <= trial % 12; ++n) c.push_back({gen::any_rational(rng), gen::any_rational(rng)});
        ComplexPoly G(c);
        ComplexPoly F = solve_complex_difference(G);
        CHECK(shift(F, cr(1)) - F == G);
    }
}

TEST_CASE("harmonic_part")
{
    CHECK(harmonic_part(monomial(2), Part::real) == P(1, "t^2 - y1^2"));
    CHECK(harmonic_part(monomial(1), Part::imaginary) == P(1, "y1"));
    CHECK(harmonic_part(ComplexPoly::real({Rational(0), Rational(1, 6), Rational(-1, 2), Rational(1, 3)}), Part::real) ==
          P(1, "1/3*t^3 - t*y1^2 - 1/2*t^2 + 1/2*y1^2 + 1/6*t"));
    CHECK(harmonic_part(monomial(3, cr(0, 1)), Part::real) == P(1, "-3*t^2*y1 + y1^3"));
}

TEST_CASE("real and imaginary parts satisfy Cauchy-Riemann")
{
    gen::Rng rng(42);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<ComplexRational> c;
        for (int n = 0; n <= trial % 10 + 1; ++n) c.push_back({gen::any_rational(rng), gen::any_rational(rng)});
        ComplexPoly p(c);
        MultiPoly re = harmonic_part(p, Part::real), im = harmonic_part(p, Part::imaginary);
        CHECK(is_harmonic(re));
        CHECK(is_harmonic(im));
        CHECK(derivative(re, 0) == derivative(im, 1));
        CHECK(derivative(re, 1) == -derivative(im, 0));

        // point evaluation of P(t + i y) against the expansion
        ComplexRational z{gen::any_rational(rng), gen::any_rational(rng)};
        std::vector<Rational> pt{z.re, z.im};
        ComplexRational value = p(z);
        CHECK(eval_exact(re, pt) == value.re);
        CHECK(eval_exact(im, pt) == value.im);
    }
}

TEST_CASE("harmonic_conjugate_completion")
{
    CHECK(harmonic_conjugate_completion(P(1, "t^2 - y1^2")) == monomial(2));
    CHECK(harmonic_conjugate_completion(P(1, "1")) == ComplexPoly::real({Rational(1)}));
    CHECK(harmonic_conjugate_completion(P(1, "t*y1")) == monomial(2, {Rational(0), Rational(-1, 2)}));
    CHECK_THROWS_AS(harmonic_conjugate_completion(P(1, "t^2")), std::invalid_argument);
    CHECK_THROWS_AS(harmonic_conjugate_completion(P(2, "t")), DimensionError);

    gen::Rng rng(43);
    for (int trial = 0; trial < 30; ++trial) {
        MultiPoly g = gen::harmonic_poly(rng, VarSpace(1), 12);
        ComplexPoly P = harmonic_conjugate_completion(g);
        CHECK(harmonic_part(P, Part::real) == g);
        CHECK(P.coeff(0).im.is_zero());
    }
}

TEST_CASE("oracle_compare")
{
    auto rep = oracle_compare(P(1, "t^2 - y1^2"), solve(DiffEqProblem(P(1, "t^2 - y1^2"))).h);
    CHECK(rep.passed());
    CHECK(rep.values.at(0).name == "r");
    CHECK(rep.values.at(0).value.is_zero());

    MultiPoly zero(VarSpace(1));
    CHECK(oracle_compare(zero, solve(DiffEqProblem(zero)).h).values.at(0).value.is_zero());

    auto lin = oracle_compare(P(1, "t"), solve(DiffEqProblem(P(1, "t"))).h);
    CHECK(lin.passed());
    CHECK(lin.values.at(0).value.is_t_free());
    CHECK(lin.values.at(0).value.degree() <= 1);

    CHECK_THROWS_AS(oracle_compare(P(1, "t"), P(1, "t")), std::invalid_argument);
}

TEST_CASE("complex polynomial JSON")
{
    ComplexPoly p({cr(1, 0), {Rational(-1, 2), Rational(3)}});
    auto j = complex_poly_to_json(p);
    CHECK(j.dump() == R"({"im":["0","3"],"re":["1","-1/2"]})");
    CHECK(complex_poly_from_json(j) == p);
    CHECK_THROWS_AS(complex_poly_from_json(nlohmann::json::parse(R"({"re":["1"],"im":[]})")), FormatError);
}
