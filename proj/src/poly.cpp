#include "slabh/poly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace slabh {

namespace {

void require_same_space(const MultiPoly& p, const MultiPoly& q)
{
    if (p.space() != q.space())
        throw DimensionError("polynomials live in different variable spaces (d=" +
                             std::to_string(p.dim()) + " vs d=" + std::to_string(q.dim()) + ")");
}

void require_var(const MultiPoly& p, int var)
{
    if (var < 0 || var >= p.space().num_vars())
        throw DimensionError("variable index " + std::to_string(var) + " out of range for d=" +
                             std::to_string(p.dim()));
}

// Powers x^0..x^n of a rational.
std::vector<Rational> powers(const Rational& x, unsigned n)
{
    std::vector<Rational> out(n + 1);
    out[0] = Rational(1);
    for (unsigned k = 1; k <= n; ++k) out[k] = out[k - 1] * x;
    return out;
}

} // namespace

VarSpace::VarSpace(int d) : d_(d)
{
    if (d < 1) throw DimensionError("dimension d must be >= 1, got " + std::to_string(d));
}

std::string VarSpace::var_name(int index) const
{
    if (index == 0) return "t";
    return "y" + std::to_string(index);
}

unsigned total_degree(const Exponents& e) { return std::accumulate(e.begin(), e.end(), 0u); }

bool GradedLexDescending::operator()(const Exponents& a, const Exponents& b) const
{
    unsigned da = total_degree(a), db = total_degree(b);
    if (da != db) return da > db;
    return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

MultiPoly MultiPoly::constant(VarSpace space, const Rational& c)
{
    MultiPoly p(space);
    p.add_term(Exponents(space.num_vars(), 0), c);
    return p;
}

MultiPoly MultiPoly::variable(VarSpace space, int index)
{
    MultiPoly p(space);
    require_var(p, index);
    Exponents e(space.num_vars(), 0);
    e[index] = 1;
    p.add_term(e, Rational(1));
    return p;
}

MultiPoly MultiPoly::monomial(VarSpace space, Exponents exps, const Rational& c)
{
    MultiPoly p(space);
    p.add_term(exps, c);
    return p;
}

int MultiPoly::degree() const
{
    // The first term in canonical order has the highest total degree.
    if (terms_.empty()) return -1;
    return static_cast<int>(total_degree(terms_.begin()->first));
}

int MultiPoly::degree_in(int var) const
{
    require_var(*this, var);
    int best = -1;
    for (const auto& [e, c] : terms_) best = std::max(best, static_cast<int>(e[var]));
    return best;
}

Rational MultiPoly::coeff(const Exponents& exps) const
{
    auto it = terms_.find(exps);
    return it == terms_.end() ? Rational(0) : it->second;
}

void MultiPoly::add_term(const Exponents& exps, const Rational& c)
{
    if (static_cast<int>(exps.size()) != space_.num_vars())
        throw DimensionError("exponent vector has length " + std::to_string(exps.size()) +
                             ", expected " + std::to_string(space_.num_vars()));
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(exps, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o)
{
    require_same_space(*this, o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o)
{
    require_same_space(*this, o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

MultiPoly& MultiPoly::operator*=(const Rational& c)
{
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, v] : terms_) v *= c;
    return *this;
}

MultiPoly add(const MultiPoly& p, const MultiPoly& q)
{
    MultiPoly r = p;
    r += q;
    return r;
}

MultiPoly sub(const MultiPoly& p, const MultiPoly& q)
{
    MultiPoly r = p;
    r -= q;
    return r;
}

MultiPoly scale(const MultiPoly& p, const Rational& c)
{
    MultiPoly r = p;
    r *= c;
    return r;
}

MultiPoly mul(const MultiPoly& p, const MultiPoly& q)
{
    require_same_space(p, q);
    MultiPoly r(p.space());
    Exponents e(p.space().num_vars());
    for (const auto& [ep, cp] : p.terms())
        for (const auto& [eq, cq] : q.terms()) {
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ep[i] + eq[i];
            r.add_term(e, cp * cq);
        }
    return r;
}

MultiPoly derivative(const MultiPoly& p, int var)
{
    require_var(p, var);
    MultiPoly r(p.space());
    for (const auto& [exps, c] : p.terms()) {
        Exponents e = exps;
        if (e[var] == 0) continue;
        Rational k(static_cast<long>(e[var]));
        --e[var];
        r.add_term(e, c * k);
    }
    return r;
}

namespace {

MultiPoly second_derivative_sum(const MultiPoly& p, int first_var)
{
    MultiPoly r(p.space());
    for (const auto& [e, c] : p.terms())
        for (int v = first_var; v < p.space().num_vars(); ++v) {
            if (e[v] < 2) continue;
            Exponents f = e;
            f[v] -= 2;
            r.add_term(f, c * Rational(static_cast<long>(e[v]) * (e[v] - 1)));
        }
    return r;
}

} // namespace

MultiPoly laplacian(const MultiPoly& p) { return second_derivative_sum(p, 0); }

MultiPoly laplacian_y(const MultiPoly& p) { return second_derivative_sum(p, 1); }

MultiPoly shift_t(const MultiPoly& p, const Rational& s)
{
    if (s.is_zero()) return p;
    const int n_max = std::max(p.degree_in(0), 0);
    auto s_pow = powers(s, static_cast<unsigned>(n_max));

    MultiPoly r(p.space());
    for (const auto& [e, c] : p.terms()) {
        const unsigned n = e[0];
        // (t+s)^n = sum_k C(n,k) s^(n-k) t^k
        Exponents f = e;
        mpz_class binom = 1;
        for (unsigned k = 0; k <= n; ++k) {
            f[0] = k;
            r.add_term(f, c * Rational(mpq_class(binom)) * s_pow[n - k]);
            binom = binom * (n - k) / (k + 1);
        }
    }
    return r;
}

MultiPoly negate_t(const MultiPoly& p)
{
    MultiPoly r(p.space());
    for (const auto& [e, c] : p.terms()) r.add_term(e, e[0] % 2 ? -c : c);
    return r;
}

ParityParts parity_split_t(const MultiPoly& p)
{
    ParityParts parts{MultiPoly(p.space()), MultiPoly(p.space())};
    for (const auto& [e, c] : p.terms()) (e[0] % 2 ? parts.odd : parts.even).add_term(e, c);
    return parts;
}

MultiPoly integrate_t(const MultiPoly& p)
{
    MultiPoly r(p.space());
    for (const auto& [exps, c] : p.terms()) {
        Exponents e = exps;
        ++e[0];
        r.add_term(e, c / Rational(static_cast<long>(e[0])));
    }
    return r;
}

MultiPoly trace(const MultiPoly& p, const Rational& t0)
{
    auto t_pow = powers(t0, static_cast<unsigned>(std::max(p.degree_in(0), 0)));
    MultiPoly r(p.space());
    for (const auto& [exps, c] : p.terms()) {
        Exponents e = exps;
        const unsigned n = e[0];
        e[0] = 0;
        r.add_term(e, c * t_pow[n]);
    }
    return r;
}

bool is_harmonic(const MultiPoly& p) { return laplacian(p).is_zero(); }

Rational eval_exact(const MultiPoly& p, std::span<const Rational> point)
{
    if (static_cast<int>(point.size()) != p.space().num_vars())
        throw DimensionError("evaluation point has " + std::to_string(point.size()) +
                             " coordinates, expected " + std::to_string(p.space().num_vars()));
    std::vector<std::vector<Rational>> pw;
    pw.reserve(point.size());
    for (std::size_t v = 0; v < point.size(); ++v)
        pw.push_back(powers(point[v], static_cast<unsigned>(std::max(p.degree_in(static_cast<int>(v)), 0))));

    Rational sum(0);
    for (const auto& [e, c] : p.terms()) {
        Rational term = c;
        for (std::size_t v = 0; v < e.size(); ++v)
            if (e[v]) term *= pw[v][e[v]];
        sum += term;
    }
    return sum;
}

double eval_float(const MultiPoly& p, std::span<const double> point)
{
    if (static_cast<int>(point.size()) != p.space().num_vars())
        throw DimensionError("evaluation point has " + std::to_string(point.size()) +
                             " coordinates, expected " + std::to_string(p.space().num_vars()));
    double sum = 0.0;
    for (const auto& [e, c] : p.terms()) {
        double term = c.to_double();
        for (std::size_t v = 0; v < e.size(); ++v)
            for (unsigned k = 0; k < e[v]; ++k) term *= point[v];
        sum += term;
    }
    return sum;
}

std::string to_string(const MultiPoly& p)
{
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : p.terms()) {
        Rational mag = c.sign() < 0 ? -c : c;
        if (first)
            os << (c.sign() < 0 ? "-" : "");
        else
            os << (c.sign() < 0 ? " - " : " + ");
        first = false;

        bool wrote = false;
        if (mag != Rational(1) || total_degree(e) == 0) {
            os << mag;
            wrote = true;
        }
        for (std::size_t v = 0; v < e.size(); ++v) {
            if (!e[v]) continue;
            if (wrote) os << '*';
            os << p.space().var_name(static_cast<int>(v));
            if (e[v] > 1) os << '^' << e[v];
            wrote = true;
        }
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const MultiPoly& p) { return os << to_string(p); }

} // namespace slabh
