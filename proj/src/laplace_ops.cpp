#include "slabh/laplace_ops.hpp"

#include <map>
#include <stdexcept>

namespace slabh {

namespace {

void require_t_free(const MultiPoly& p, const char* what)
{
    if (!p.is_t_free())
        throw std::invalid_argument(std::string(what) + ": input depends on t: " + to_string(p));
}

// sum_k sign^k t^(2k+parity) / (2k+parity)! Lap_y^k f
MultiPoly ck_series(const MultiPoly& f, unsigned parity)
{
    MultiPoly out(f.space());
    MultiPoly lap_k = f;
    Rational coef(1);
    unsigned t_power = parity;
    while (!lap_k.is_zero()) {
        for (const auto& [exps, c] : lap_k.terms()) {
            Exponents e = exps;
            e[0] = t_power;
            out.add_term(e, c * coef);
        }
        // next coefficient: -coef / ((t_power+1)(t_power+2))
        coef = -coef / Rational(static_cast<long>(t_power + 1) * (t_power + 2));
        t_power += 2;
        lap_k = laplacian_y(lap_k);
    }
    return out;
}

} // namespace

MultiPoly even_ck_extension(const MultiPoly& f)
{
    require_t_free(f, "even_ck_extension");
    return ck_series(f, 0);
}

MultiPoly odd_ck_extension(const MultiPoly& g)
{
    require_t_free(g, "odd_ck_extension");
    return ck_series(g, 1);
}

TraceOperator::TraceOperator(Rational c, int d) : c_(std::move(c)), d_(d)
{
    if (c_.is_zero()) throw std::invalid_argument("trace operator height c must be nonzero");
    VarSpace check(d);
    (void)check;
}

void TraceOperator::check_input(const MultiPoly& p) const
{
    if (p.dim() != d_)
        throw DimensionError("trace operator of dimension " + std::to_string(d_) + " applied to d=" +
                             std::to_string(p.dim()));
    require_t_free(p, "trace operator");
}

MultiPoly TraceOperator::apply(const MultiPoly& g) const
{
    check_input(g);
    // c g + c N_c g
    MultiPoly out = g + nilpotent_part(g);
    out *= c_;
    return out;
}

MultiPoly TraceOperator::nilpotent_part(const MultiPoly& q) const
{
    MultiPoly out(q.space());
    const Rational c2 = c_ * c_;
    Rational coef(1);
    MultiPoly lap_k = laplacian_y(q);
    for (long k = 1; !lap_k.is_zero(); ++k) {
        // (-1)^k c^(2k) / (2k+1)!
        coef = -coef * c2 / Rational((2 * k) * (2 * k + 1));
        out += scale(lap_k, coef);
        lap_k = laplacian_y(lap_k);
    }
    return out;
}

MultiPoly TraceOperator::invert(const MultiPoly& p) const
{
    check_input(p);
    // N_c lowers degree by at least 2, so the series stops after
    // floor(deg/2) + 1 terms.
    MultiPoly sum(p.space());
    MultiPoly term = p;
    while (!term.is_zero()) {
        sum += term;
        term = -nilpotent_part(term);
    }
    sum *= Rational(1) / c_;
    return sum;
}

MultiPoly trace_operator(const TraceOperator& op, const MultiPoly& g) { return op.apply(g); }

MultiPoly invert_trace_operator(const TraceOperator& op, const MultiPoly& p) { return op.invert(p); }

namespace {

// |y|^(2j) as a polynomial.
MultiPoly radius_power(VarSpace space, unsigned j)
{
    MultiPoly r2(space);
    for (int v = 1; v < space.num_vars(); ++v) {
        Exponents e(space.num_vars(), 0);
        e[v] = 2;
        r2.add_term(e, Rational(1));
    }
    MultiPoly out = MultiPoly::constant(space, Rational(1));
    for (unsigned i = 0; i < j; ++i) out = out * r2;
    return out;
}

} // namespace

MultiPoly poisson_solve(const MultiPoly& f)
{
    require_t_free(f, "poisson_solve");
    const VarSpace space = f.space();
    const long d = space.dim();

    std::map<unsigned, MultiPoly> components;
    for (const auto& [e, c] : f.terms())
        components.try_emplace(total_degree(e), space).first->second.add_term(e, c);

    std::vector<MultiPoly> radial{radius_power(space, 1)};
    MultiPoly G(space);
    for (const auto& [m, fm] : components) {
        Rational ck(1, 2 * (2 * static_cast<long>(m) + d));
        MultiPoly lap_k = fm;
        for (long k = 0;; ++k) {
            while (radial.size() <= static_cast<std::size_t>(k)) radial.push_back(radial.back() * radial.front());
            G += scale(radial[k] * lap_k, ck);
            lap_k = laplacian_y(lap_k);
            if (lap_k.is_zero()) break;
            ck = -ck / Rational(2 * (k + 2) * (2 * static_cast<long>(m) - 2 * (k + 1) + d));
        }
    }

    if (laplacian_y(G) != f) throw std::logic_error("poisson_solve: Lap_y G != f for f = " + to_string(f));
    return G;
}

} // namespace slabh
