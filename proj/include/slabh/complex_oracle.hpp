#pragma once

#include "slabh/poly.hpp"
#include "slabh/report.hpp"

#include <json.hpp>

#include <vector>

namespace slabh {

struct ComplexRational {
    Rational re;
    Rational im;

    bool is_zero() const { return re.is_zero() && im.is_zero(); }
    friend bool operator==(const ComplexRational&, const ComplexRational&) = default;
};

ComplexRational operator+(const ComplexRational& a, const ComplexRational& b);
ComplexRational operator*(const ComplexRational& a, const ComplexRational& b);

/// Polynomial in one complex variable z with Gaussian-rational coefficients.
/// coeffs()[n] multiplies z^n; trailing zeros are trimmed.
class ComplexPoly {
public:
    ComplexPoly() = default;
    explicit ComplexPoly(std::vector<ComplexRational> coeffs);
    static ComplexPoly real(std::vector<Rational> coeffs);

    const std::vector<ComplexRational>& coeffs() const { return coeffs_; }
    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    ComplexRational coeff(std::size_t n) const;

    ComplexRational operator()(const ComplexRational& z) const;

    friend bool operator==(const ComplexPoly&, const ComplexPoly&) = default;

private:
    void trim();
    std::vector<ComplexRational> coeffs_;
};

ComplexPoly operator+(const ComplexPoly& p, const ComplexPoly& q);
ComplexPoly operator-(const ComplexPoly& p, const ComplexPoly& q);
ComplexPoly scale(const ComplexPoly& p, const ComplexRational& c);
/// P(z + s).
ComplexPoly shift(const ComplexPoly& p, const ComplexRational& s);

/// {"re": ["1", "-1/2"], "im": ["0", "0"]}
nlohmann::json complex_poly_to_json(const ComplexPoly& p);
ComplexPoly complex_poly_from_json(const nlohmann::json& j);

/// B_n from B_0 = 1, B_n' = n B_{n-1} and zero mean on [0, 1].
ComplexPoly bernoulli_polynomial(unsigned n);

/// F = sum_n p_n B_{n+1}(z) / (n+1), so that F(z+1) - F(z) = G(z).
ComplexPoly solve_complex_difference(const ComplexPoly& G);

enum class Part { real, imaginary };

/// Re or Im of P(t + i y1) as a d = 1 polynomial in (t, y1).
MultiPoly harmonic_part(const ComplexPoly& P, Part which);

/// P with Re P(t + i y1) = g and Im P(0) = 0. Requires d = 1 and g harmonic
/// (std::invalid_argument otherwise).
ComplexPoly harmonic_conjugate_completion(const MultiPoly& g);

/// Solves the d = 1 difference equation by the Bernoulli route and compares
/// it with `h_general` through compare_solutions. The recovered r(y) is
/// reported under values["r"].
VerificationReport oracle_compare(const MultiPoly& g, const MultiPoly& h_general);

/// Re of the Bernoulli-route solution for d = 1 harmonic g.
MultiPoly bernoulli_route_solution(const MultiPoly& g);

} // namespace slabh
