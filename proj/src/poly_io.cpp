#include "slabh/poly_io.hpp"

#include <cctype>

namespace slabh {

using nlohmann::json;

json poly_to_json(const MultiPoly& p)
{
    json terms = json::array();
    for (const auto& [e, c] : p.terms())
        terms.push_back(json{{"coeff", c.to_string()}, {"exps", e}});
    return json{{"d", p.dim()}, {"terms", std::move(terms)}};
}

int read_dimension(const json& j, const char* key)
{
    if (!j.is_object() || !j.contains(key) || !j[key].is_number_integer())
        throw FormatError(std::string("missing or non-integer \"") + key + "\"");
    auto d = j[key].get<long long>();
    if (d < 1 || d > 64) throw FormatError(std::string("\"") + key + "\" must be in 1..64");
    return static_cast<int>(d);
}

Rational read_rational(const json& j, const char* key)
{
    if (!j.is_object() || !j.contains(key) || !j[key].is_string())
        throw FormatError(std::string("missing or non-string rational \"") + key + "\"");
    try {
        return Rational::parse(j[key].get<std::string>());
    } catch (const std::invalid_argument& e) {
        throw FormatError(e.what());
    }
}

MultiPoly poly_from_json(const json& j)
{
    const int d = read_dimension(j);
    VarSpace space(d);
    if (!j.contains("terms") || !j["terms"].is_array()) throw FormatError("missing \"terms\" array");

    MultiPoly p(space);
    for (const auto& term : j["terms"]) {
        Rational c = read_rational(term, "coeff");
        if (!term.contains("exps") || !term["exps"].is_array())
            throw FormatError("term without \"exps\" array");
        const auto& ej = term["exps"];
        if (static_cast<int>(ej.size()) != space.num_vars())
            throw FormatError("exponent vector of length " + std::to_string(ej.size()) +
                              ", expected " + std::to_string(space.num_vars()));
        Exponents e;
        for (const auto& x : ej) {
            if (!x.is_number_integer() || x.get<long long>() < 0 || x.get<long long>() > 100000)
                throw FormatError("exponents must be nonnegative integers");
            e.push_back(static_cast<unsigned>(x.get<long long>()));
        }
        p.add_term(e, c);
    }
    return p;
}

namespace {

class TextParser {
public:
    TextParser(VarSpace space, std::string_view text) : space_(space), text_(text) {}

    MultiPoly run()
    {
        MultiPoly p(space_);
        skip_ws();
        if (at_end()) fail("empty polynomial");
        bool first = true;
        while (!at_end()) {
            int sign = 1;
            if (peek() == '+' || peek() == '-') {
                sign = peek() == '-' ? -1 : 1;
                ++pos_;
                skip_ws();
            } else if (!first) {
                fail("expected '+' or '-'");
            }
            first = false;
            auto [e, c] = term();
            p.add_term(e, sign < 0 ? -c : c);
            skip_ws();
        }
        return p;
    }

private:
    std::pair<Exponents, Rational> term()
    {
        Exponents e(space_.num_vars(), 0);
        Rational c(1);
        bool need_factor = true;
        while (need_factor) {
            skip_ws();
            if (at_end()) fail("dangling operator");
            if (std::isdigit(static_cast<unsigned char>(peek()))) {
                c *= number();
            } else {
                int v = variable();
                unsigned k = 1;
                skip_ws();
                if (!at_end() && peek() == '^') {
                    ++pos_;
                    skip_ws();
                    k = static_cast<unsigned>(std::stoul(digits()));
                }
                e[v] += k;
            }
            skip_ws();
            need_factor = !at_end() && peek() == '*';
            if (need_factor) ++pos_;
        }
        return {e, c};
    }

    Rational number()
    {
        std::string s = digits();
        if (!at_end() && peek() == '/') {
            ++pos_;
            s += '/' + digits();
        }
        try {
            return Rational::parse(s);
        } catch (const std::invalid_argument& ex) {
            fail(ex.what());
        }
    }

    int variable()
    {
        if (peek() == 't') {
            ++pos_;
            return 0;
        }
        if (peek() == 'y') {
            ++pos_;
            int v = std::stoi(digits());
            if (v < 1 || v > space_.dim()) fail("variable y" + std::to_string(v) + " out of range");
            return v;
        }
        fail(std::string("unexpected character '") + peek() + "'");
    }

    std::string digits()
    {
        std::size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        if (start == pos_) fail("expected digits");
        return std::string(text_.substr(start, pos_ - start));
    }

    [[noreturn]] void fail(const std::string& what) const
    {
        throw FormatError("polynomial text at offset " + std::to_string(pos_) + ": " + what);
    }

    void skip_ws()
    {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }
    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }

    VarSpace space_;
    std::string_view text_;
    std::size_t pos_ = 0;
};

} // namespace

MultiPoly parse_poly(VarSpace space, std::string_view text) { return TextParser(space, text).run(); }

} // namespace slabh
