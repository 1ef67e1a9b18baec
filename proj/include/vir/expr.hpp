#pragma once

#include <string>

#include "vir/scalar.hpp"

namespace vir {

// Parses arithmetic expressions over Q(t): integers, the variable (default
// "t"), + - * /, integer powers with ^ (negative exponents allowed), and
// parentheses.  Throws ParseError on malformed input.
Scalar parse_scalar(const std::string& text, const std::string& var = "t");

}  // namespace vir
