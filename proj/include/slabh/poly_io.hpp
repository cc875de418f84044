#pragma once

#include "slabh/poly.hpp"

#include <json.hpp>

#include <stdexcept>
#include <string>
#include <string_view>

namespace slabh {

/// Malformed serialized input (JSON schema or polynomial text).
class FormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// {"d": 1, "terms": [{"coeff": "-1/3", "exps": [3, 0]}, ...]} in canonical
/// term order.
nlohmann::json poly_to_json(const MultiPoly& p);
/// Accepts terms in any order (duplicates accumulate).
MultiPoly poly_from_json(const nlohmann::json& j);

/// Reads a dimension field that must be an integer >= 1.
int read_dimension(const nlohmann::json& j, const char* key = "d");
/// Reads a rational field stored as a "p/q" string.
Rational read_rational(const nlohmann::json& j, const char* key);

/// Parses the text form written by to_string, e.g. "t*y1^2 + 1/3*t - 1/3*t^3".
/// Factors are joined by '*'; "t^3/3" is not accepted.
MultiPoly parse_poly(VarSpace space, std::string_view text);

} // namespace slabh
