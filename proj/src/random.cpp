#include "slabh/random.hpp"

#include "slabh/laplace_ops.hpp"

namespace slabh::gen {

namespace {

long uniform(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

// Random exponent vector with the given total degree spread over vars
// first..num_vars-1.
Exponents spread(Rng& rng, int num_vars, int first, unsigned degree)
{
    Exponents e(num_vars, 0);
    for (unsigned k = 0; k < degree; ++k) ++e[uniform(rng, first, num_vars - 1)];
    return e;
}

MultiPoly random_terms(Rng& rng, VarSpace space, int max_deg, int max_terms, int first_var)
{
    MultiPoly p(space);
    if (max_deg < 0) return p;
    const long n = uniform(rng, 1, max_terms);
    for (long i = 0; i < n; ++i) {
        auto deg = static_cast<unsigned>(uniform(rng, 0, max_deg));
        p.add_term(spread(rng, space.num_vars(), first_var, deg), rational(rng));
    }
    return p;
}

} // namespace

Rational rational(Rng& rng, long max_num, long max_den)
{
    long num = 0;
    while (num == 0) num = uniform(rng, -max_num, max_num);
    return Rational(num, uniform(rng, 1, max_den));
}

Rational any_rational(Rng& rng, long max_num, long max_den)
{
    return Rational(uniform(rng, -max_num, max_num), uniform(rng, 1, max_den));
}

MultiPoly poly(Rng& rng, VarSpace space, int max_deg, int max_terms)
{
    return random_terms(rng, space, max_deg, max_terms, 0);
}

MultiPoly t_free_poly(Rng& rng, VarSpace space, int max_deg, int max_terms)
{
    return random_terms(rng, space, max_deg, max_terms, 1);
}

MultiPoly harmonic_poly(Rng& rng, VarSpace space, int max_deg, int max_terms)
{
    MultiPoly h = even_ck_extension(t_free_poly(rng, space, max_deg, max_terms));
    if (max_deg >= 1) h += odd_ck_extension(t_free_poly(rng, space, max_deg - 1, max_terms));
    return h;
}

MultiPoly t_free_harmonic_poly(Rng& rng, VarSpace space, int max_deg, int max_terms)
{
    MultiPoly r(space);
    if (space.dim() == 1) {
        r.add_term({0, 0}, any_rational(rng));
        if (max_deg >= 1) r.add_term({0, 1}, any_rational(rng));
        return r;
    }
    // A harmonic polynomial in (t, y1..y_{d-1}) renamed to (y1, ..., yd).
    MultiPoly lower = harmonic_poly(rng, VarSpace(space.dim() - 1), max_deg, max_terms);
    for (const auto& [e, c] : lower.terms()) {
        Exponents f(space.num_vars(), 0);
        for (std::size_t v = 0; v < e.size(); ++v) f[v + 1] = e[v];
        r.add_term(f, c);
    }
    return r;
}

} // namespace slabh::gen
