#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace opbianchi {

/// Exact rational number. Always kept in canonical (reduced) form.
using Rational = mpq_class;

/// Raised when a value carries a different sqrt(2*p0) context than its operand.
class ContextMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Accepts "7", "-3/4" and finite decimals such as "0.25" or "-1.5".
Rational parse_rational(std::string_view text);

/// "3", "-1/2".
std::string to_string(const Rational& r);

inline double to_double(const Rational& r) { return r.get_d(); }

/// True when r = root^2 for a rational root >= 0. The root is written when non-null.
bool is_perfect_square(const Rational& r, Rational* root = nullptr);

}  // namespace opbianchi
