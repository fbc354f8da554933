#include "ctk/scalar.hpp"

#include <stdexcept>

namespace ctk {

int sign(const Scalar& s) {
  if (s > 0) return 1;
  if (s < 0) return -1;
  return 0;
}

namespace {

// Validates and normalizes an integer token; drops an explicit '+'.
std::string integer_token(std::string_view text, std::string_view whole) {
  std::string_view digits = text;
  bool negative = false;
  if (!digits.empty() && (digits.front() == '+' || digits.front() == '-')) {
    negative = digits.front() == '-';
    digits.remove_prefix(1);
  }
  if (digits.empty()) {
    throw std::invalid_argument("invalid rational literal: '" +
                                std::string(whole) + "'");
  }
  for (char ch : digits) {
    if (ch < '0' || ch > '9') {
      throw std::invalid_argument("invalid rational literal: '" +
                                  std::string(whole) + "'");
    }
  }
  return (negative ? "-" : "") + std::string(digits);
}

}  // namespace

Scalar parse_scalar(std::string_view text) {
  const auto slash = text.find('/');
  boost::multiprecision::cpp_int num{integer_token(text.substr(0, slash), text)};
  if (slash == std::string_view::npos) {
    return Scalar(num);
  }
  boost::multiprecision::cpp_int den{
      integer_token(text.substr(slash + 1), text)};
  if (den == 0) {
    throw std::invalid_argument("zero denominator in '" + std::string(text) +
                                "'");
  }
  if (den < 0) {  // keep the canonical positive-denominator form
    num = -num;
    den = -den;
  }
  return Scalar(num, den);
}

std::string to_string(const Scalar& s) { return s.str(); }

}  // namespace ctk
