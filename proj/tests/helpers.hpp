#pragma once

#include "slabh/poly_io.hpp"

inline slabh::MultiPoly P(int d, std::string_view text) { return slabh::parse_poly(slabh::VarSpace(d), text); }
inline slabh::Rational Q(std::string_view text) { return slabh::Rational::parse(text); }
