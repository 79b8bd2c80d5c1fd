#ifndef GTB_PARSE_HPP
#define GTB_PARSE_HPP

#include <string>
#include <string_view>

#include "gtb/scalar_field.hpp"

namespace gtb {

// Parses the expression grammar used by scenario files:
//   integers, rationals p/q, the imaginary unit i, variables x1..xn,
//   operators + - * / ^ (nonnegative integer exponents), parentheses.
// Whitespace is insignificant. Throws SyntaxError (with byte offset),
// UnknownVariable, or DivisionByZeroField.
ScalarField sf_parse(std::string_view text, std::size_t nvars);

}  // namespace gtb

#endif
