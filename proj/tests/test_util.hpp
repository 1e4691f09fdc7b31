#pragma once

#include "sqdisc/expr.hpp"
#include "sqdisc/poly.hpp"
#include "sqdisc/rational.hpp"

namespace sqdisc::testing {

inline Rational Q(const char* s) { return Rational::parse(s); }
inline RationalFunction RF(const char* s, const char* var = "h") { return parse_rational_function(s, var); }
inline Poly P(const char* s, const char* var = "h") { return parse_rational_function(s, var).num(); }

}  // namespace sqdisc::testing
