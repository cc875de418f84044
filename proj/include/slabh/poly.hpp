#pragma once

#include "slabh/rational.hpp"

#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace slabh {

/// Thrown when two operands live in different variable spaces, or an
/// index/point does not fit the space.
class DimensionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Variables (t, y1, ..., yd). Index 0 is always t.
class VarSpace {
public:
    explicit VarSpace(int d);

    int dim() const { return d_; }
    int num_vars() const { return d_ + 1; }
    std::string var_name(int index) const;

    friend bool operator==(VarSpace, VarSpace) = default;

private:
    int d_;
};

using Exponents = std::vector<unsigned>;

/// Canonical term order: higher total degree first, ties broken by
/// lexicographically larger exponent vector (t most significant).
struct GradedLexDescending {
    bool operator()(const Exponents& a, const Exponents& b) const;
};

unsigned total_degree(const Exponents& e);

/// Sparse multivariate polynomial over the rationals. Zero coefficients are
/// never stored, so two polynomials are equal iff their term maps are equal.
class MultiPoly {
public:
    using TermMap = std::map<Exponents, Rational, GradedLexDescending>;

    explicit MultiPoly(VarSpace space) : space_(space) {}

    static MultiPoly constant(VarSpace space, const Rational& c);
    static MultiPoly variable(VarSpace space, int index);
    static MultiPoly monomial(VarSpace space, Exponents exps, const Rational& c);

    VarSpace space() const { return space_; }
    int dim() const { return space_.dim(); }
    const TermMap& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }

    bool is_zero() const { return terms_.empty(); }
    /// Total degree; -1 for the zero polynomial.
    int degree() const;
    /// Highest exponent of one variable; -1 for the zero polynomial.
    int degree_in(int var) const;
    bool is_t_free() const { return degree_in(0) <= 0; }
    Rational coeff(const Exponents& exps) const;

    /// Accumulates c * x^exps into this polynomial.
    void add_term(const Exponents& exps, const Rational& c);

    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    MultiPoly& operator*=(const Rational& c);

    friend bool operator==(const MultiPoly& a, const MultiPoly& b)
    {
        return a.space_ == b.space_ && a.terms_ == b.terms_;
    }

private:
    VarSpace space_;
    TermMap terms_;
};

MultiPoly add(const MultiPoly& p, const MultiPoly& q);
MultiPoly sub(const MultiPoly& p, const MultiPoly& q);
MultiPoly mul(const MultiPoly& p, const MultiPoly& q);
MultiPoly scale(const MultiPoly& p, const Rational& c);

inline MultiPoly operator+(const MultiPoly& p, const MultiPoly& q) { return add(p, q); }
inline MultiPoly operator-(const MultiPoly& p, const MultiPoly& q) { return sub(p, q); }
inline MultiPoly operator*(const MultiPoly& p, const MultiPoly& q) { return mul(p, q); }
inline MultiPoly operator*(const Rational& c, const MultiPoly& p) { return scale(p, c); }
inline MultiPoly operator-(const MultiPoly& p) { return scale(p, Rational(-1)); }

/// Partial derivative with respect to variable `var` (0 = t).
MultiPoly derivative(const MultiPoly& p, int var);
/// Laplacian in all d+1 variables.
MultiPoly laplacian(const MultiPoly& p);
/// Laplacian in y1..yd only.
MultiPoly laplacian_y(const MultiPoly& p);
/// p(t + s, y).
MultiPoly shift_t(const MultiPoly& p, const Rational& s);
/// p(-t, y).
MultiPoly negate_t(const MultiPoly& p);

struct ParityParts {
    MultiPoly even;
    MultiPoly odd;
};
/// Splits p into parts even and odd in t (about t = 0).
ParityParts parity_split_t(const MultiPoly& p);

/// Integral of p(tau, y) over tau from 0 to t.
MultiPoly integrate_t(const MultiPoly& p);
/// p(t0, y), returned in the same space with zero t-exponents.
MultiPoly trace(const MultiPoly& p, const Rational& t0);

bool is_harmonic(const MultiPoly& p);

Rational eval_exact(const MultiPoly& p, std::span<const Rational> point);
/// Floating-point evaluation; for sampling only, never for verification.
double eval_float(const MultiPoly& p, std::span<const double> point);

/// Human-readable form, e.g. "-1/3*t^3 + t*y1^2 + 1/3*t". Zero prints "0".
std::string to_string(const MultiPoly& p);
std::ostream& operator<<(std::ostream& os, const MultiPoly& p);

} // namespace slabh
