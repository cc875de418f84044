#include "slabh/complex_oracle.hpp"

#include "slabh/difference_eq.hpp"
#include "slabh/poly_io.hpp"

#include <stdexcept>

namespace slabh {

ComplexRational operator+(const ComplexRational& a, const ComplexRational& b) { return {a.re + b.re, a.im + b.im}; }

ComplexRational operator*(const ComplexRational& a, const ComplexRational& b)
{
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

ComplexPoly::ComplexPoly(std::vector<ComplexRational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

ComplexPoly ComplexPoly::real(std::vector<Rational> coeffs)
{
    std::vector<ComplexRational> c;
    c.reserve(coeffs.size());
    for (auto& r : coeffs) c.push_back({std::move(r), Rational(0)});
    return ComplexPoly(std::move(c));
}

void ComplexPoly::trim()
{
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

ComplexRational ComplexPoly::coeff(std::size_t n) const { return n < coeffs_.size() ? coeffs_[n] : ComplexRational{}; }

ComplexRational ComplexPoly::operator()(const ComplexRational& z) const
{
    ComplexRational acc{};
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + *it;
    return acc;
}

ComplexPoly operator+(const ComplexPoly& p, const ComplexPoly& q)
{
    std::vector<ComplexRational> c(std::max(p.coeffs().size(), q.coeffs().size()));
    for (std::size_t n = 0; n < c.size(); ++n) c[n] = p.coeff(n) + q.coeff(n);
    return ComplexPoly(std::move(c));
}

ComplexPoly operator-(const ComplexPoly& p, const ComplexPoly& q) { return p + scale(q, {Rational(-1), Rational(0)}); }

ComplexPoly scale(const ComplexPoly& p, const ComplexRational& c)
{
    std::vector<ComplexRational> out;
    out.reserve(p.coeffs().size());
    for (const auto& a : p.coeffs()) out.push_back(a * c);
    return ComplexPoly(std::move(out));
}

ComplexPoly shift(const ComplexPoly& p, const ComplexRational& s)
{
    // Horner in the polynomial ring: acc = acc * (z + s) + a_n
    std::vector<ComplexRational> acc;
    for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) {
        std::vector<ComplexRational> next(acc.size() + 1);
        for (std::size_t k = 0; k < acc.size(); ++k) {
            next[k + 1] = next[k + 1] + acc[k];
            next[k] = next[k] + acc[k] * s;
        }
        next[0] = next[0] + *it;
        acc = std::move(next);
    }
    return ComplexPoly(std::move(acc));
}

nlohmann::json complex_poly_to_json(const ComplexPoly& p)
{
    nlohmann::json re = nlohmann::json::array(), im = nlohmann::json::array();
    for (const auto& c : p.coeffs()) {
        re.push_back(c.re.to_string());
        im.push_back(c.im.to_string());
    }
    return {{"re", re}, {"im", im}};
}

ComplexPoly complex_poly_from_json(const nlohmann::json& j)
{
    if (!j.is_object() || !j.contains("re") || !j.contains("im") || !j["re"].is_array() || !j["im"].is_array() ||
        j["re"].size() != j["im"].size())
        throw FormatError("complex polynomial needs equal-length \"re\" and \"im\" arrays");
    std::vector<ComplexRational> c;
    for (std::size_t n = 0; n < j["re"].size(); ++n) {
        if (!j["re"][n].is_string() || !j["im"][n].is_string())
            throw FormatError("complex coefficients must be rational strings");
        try {
            c.push_back({Rational::parse(j["re"][n].get<std::string>()), Rational::parse(j["im"][n].get<std::string>())});
        } catch (const std::invalid_argument& e) {
            throw FormatError(e.what());
        }
    }
    return ComplexPoly(std::move(c));
}

ComplexPoly bernoulli_polynomial(unsigned n)
{
    std::vector<Rational> b{Rational(1)};
    for (unsigned m = 1; m <= n; ++m) {
        // B_m = m * int B_{m-1} + C, with C fixing int_0^1 B_m = 0.
        std::vector<Rational> next(m + 1);
        Rational mean(0);
        for (unsigned k = 0; k < b.size(); ++k) {
            next[k + 1] = b[k] * Rational(static_cast<long>(m)) / Rational(static_cast<long>(k + 1));
            mean += next[k + 1] / Rational(static_cast<long>(k + 2));
        }
        next[0] = -mean;
        b = std::move(next);
    }
    return ComplexPoly::real(std::move(b));
}

ComplexPoly solve_complex_difference(const ComplexPoly& G)
{
    ComplexPoly F;
    for (std::size_t n = 0; n < G.coeffs().size(); ++n) {
        const auto& p = G.coeffs()[n];
        if (p.is_zero()) continue;
        ComplexRational c{p.re / Rational(static_cast<long>(n + 1)), p.im / Rational(static_cast<long>(n + 1))};
        F = F + scale(bernoulli_polynomial(static_cast<unsigned>(n + 1)), c);
    }
    return F;
}

MultiPoly harmonic_part(const ComplexPoly& P, Part which)
{
    VarSpace space(1);
    MultiPoly out(space);
    for (std::size_t n = 0; n < P.coeffs().size(); ++n) {
        const auto& a = P.coeffs()[n];
        if (a.is_zero()) continue;
        // (t + i y)^n = sum_k C(n,k) t^(n-k) i^k y^k
        mpz_class binom = 1;
        for (std::size_t k = 0; k <= n; ++k) {
            ComplexRational ik = k % 4 == 0   ? ComplexRational{Rational(1), Rational(0)}
                                 : k % 4 == 1 ? ComplexRational{Rational(0), Rational(1)}
                                 : k % 4 == 2 ? ComplexRational{Rational(-1), Rational(0)}
                                              : ComplexRational{Rational(0), Rational(-1)};
            ComplexRational c = a * ik;
            const Rational& part = which == Part::real ? c.re : c.im;
            out.add_term({static_cast<unsigned>(n - k), static_cast<unsigned>(k)}, part * Rational(mpq_class(binom)));
            binom = binom * static_cast<unsigned long>(n - k) / static_cast<unsigned long>(k + 1);
        }
    }
    if (!is_harmonic(out)) throw std::logic_error("harmonic_part produced a non-harmonic polynomial");
    return out;
}

ComplexPoly harmonic_conjugate_completion(const MultiPoly& g)
{
    if (g.dim() != 1) throw DimensionError("harmonic_conjugate_completion needs d = 1, got d=" + std::to_string(g.dim()));
    MultiPoly lap = laplacian(g);
    if (!lap.is_zero())
        throw std::invalid_argument("harmonic_conjugate_completion: input is not harmonic, laplacian = " + to_string(lap));

    // A harmonic homogeneous part of degree n is a Re z^n - b Im z^n; read a
    // off the t^n coefficient and b off the t^(n-1) y coefficient.
    std::vector<ComplexRational> c(static_cast<std::size_t>(std::max(g.degree(), -1) + 1));
    for (std::size_t n = 0; n < c.size(); ++n) {
        const unsigned un = static_cast<unsigned>(n);
        c[n].re = g.coeff({un, 0});
        if (n > 0) c[n].im = -g.coeff({un - 1, 1}) / Rational(static_cast<long>(n));
    }
    ComplexPoly P(std::move(c));
    if (harmonic_part(P, Part::real) != g)
        throw std::logic_error("harmonic_conjugate_completion: real part does not reproduce " + to_string(g));
    return P;
}

MultiPoly bernoulli_route_solution(const MultiPoly& g)
{
    return harmonic_part(solve_complex_difference(harmonic_conjugate_completion(g)), Part::real);
}

VerificationReport oracle_compare(const MultiPoly& g, const MultiPoly& h_general)
{
    return timed([&] {
        MultiPoly h_oracle = bernoulli_route_solution(g);
        MultiPoly r = compare_solutions(h_general, h_oracle, g);
        auto rep = VerificationReport::from_residuals(
            "oracle_compare", {{"t_dependence", r - trace(r, Rational(0))}, {"laplacian_y_r", laplacian_y(r)}});
        rep.values.push_back({"r", r});
        rep.values.push_back({"h_oracle", h_oracle});
        return rep;
    });
}

} // namespace slabh
