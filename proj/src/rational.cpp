#include "slabh/rational.hpp"

#include <stdexcept>

namespace slabh {

namespace {

bool all_digits(std::string_view s)
{
    if (s.empty()) return false;
    for (char c : s)
        if (c < '0' || c > '9') return false;
    return true;
}

} // namespace

Rational::Rational(long num, long den)
{
    if (den == 0) throw std::domain_error("rational with zero denominator");
    value_ = mpq_class(num, den);
    value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value))
{
    value_.canonicalize();
}

Rational Rational::parse(std::string_view text)
{
    std::string_view body = text;
    if (!body.empty() && body.front() == '-') body.remove_prefix(1);
    auto slash = body.find('/');
    std::string_view num = body.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view{} : body.substr(slash + 1);
    if (!all_digits(num) || (slash != std::string_view::npos && !all_digits(den)))
        throw std::invalid_argument("malformed rational \"" + std::string(text) + "\"");

    mpq_class q;
    q.get_num().set_str(std::string(num), 10);
    if (slash != std::string_view::npos) {
        q.get_den().set_str(std::string(den), 10);
        if (sgn(q.get_den()) == 0)
            throw std::invalid_argument("zero denominator in \"" + std::string(text) + "\"");
    } else {
        q.get_den() = 1;
    }
    if (text.front() == '-') q.get_num() = -q.get_num();
    return Rational(std::move(q));
}

bool Rational::is_integer() const { return value_.get_den() == 1; }

Rational Rational::numerator() const { return Rational(mpq_class(value_.get_num())); }

Rational Rational::denominator() const { return Rational(mpq_class(value_.get_den())); }

std::string Rational::to_string() const { return value_.get_str(10); }

Rational& Rational::operator/=(const Rational& o)
{
    if (o.is_zero()) throw std::domain_error("division by zero rational");
    value_ /= o.value_;
    return *this;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b)
{
    int c = cmp(a.value_, b.value_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

Rational pow(const Rational& base, unsigned exponent)
{
    mpq_class r;
    mpz_pow_ui(r.get_num_mpz_t(), base.raw().get_num_mpz_t(), exponent);
    mpz_pow_ui(r.get_den_mpz_t(), base.raw().get_den_mpz_t(), exponent);
    return Rational(std::move(r));
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

} // namespace slabh
