#pragma once

#include <string>
#include <string_view>

#include "sqdisc/poly.hpp"

namespace sqdisc {

/// Parses a univariate expression such as "256*(t^2+t+1)^3/(t^2*(t+1)^2)" in
/// the variable `var`. Supports + - * / ^ (nonnegative integer exponents),
/// parentheses, integer literals and implicit multiplication ("16t", "(h+1)(h-1)").
RationalFunction parse_rational_function(std::string_view text, const std::string& var);

}  // namespace sqdisc
