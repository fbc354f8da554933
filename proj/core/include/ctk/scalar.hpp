#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace ctk {

/// Exact rational scalar. Always held in canonical form (reduced,
/// positive denominator), so equality is structural and every sign
/// test is decidable. No rounding happens anywhere in the library.
using Scalar = boost::multiprecision::cpp_rational;

/// Sign of a scalar: -1, 0 or +1.
int sign(const Scalar& s);

/// Parses "p/q" or the integer shorthand "p". Rejects decimals,
/// empty input and zero denominators with std::invalid_argument.
Scalar parse_scalar(std::string_view text);

/// Renders "p/q", or just "p" when the denominator is 1.
std::string to_string(const Scalar& s);

}  // namespace ctk
