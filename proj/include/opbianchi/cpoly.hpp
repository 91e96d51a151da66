#pragma once

#include <array>
#include <cstdint>
#include <map>

#include "opbianchi/ext_scalar.hpp"

namespace opbianchi {

/// Formal commuting coordinates of the oscillator phase space.
enum class Var : std::uint8_t { q = 0, p = 1, a_plus = 2, a_minus = 3 };
inline constexpr std::size_t kVarCount = 4;

using Exponents = std::array<std::uint8_t, kVarCount>;

/// Graded order: higher total degree first, then lexicographically larger exponents.
struct MonomialOrder {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

/// Polynomial in (q, p, A+, A-) with coefficients in Q[s]/(s^2 - 2 p0).
class CPoly {
 public:
  using Terms = std::map<Exponents, ExtScalar, MonomialOrder>;

  CPoly() = default;
  CPoly(int c) : CPoly(ExtScalar(c)) {}  // NOLINT(google-explicit-constructor)
  CPoly(ExtScalar c);                     // NOLINT(google-explicit-constructor)
  CPoly(Rational c) : CPoly(ExtScalar(std::move(c))) {}  // NOLINT(google-explicit-constructor)

  static CPoly variable(Var v);
  static CPoly monomial(ExtScalar coeff, const Exponents& exps);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  ExtScalar constant_term() const;
  int total_degree() const;  // -1 for the zero polynomial
  int degree_in(Var v) const;

  CPoly derivative(Var v) const;

  CPoly operator-() const;
  CPoly& operator+=(const CPoly& rhs);
  CPoly& operator-=(const CPoly& rhs);
  CPoly& operator*=(const CPoly& rhs);
  friend CPoly operator+(CPoly a, const CPoly& b) { return a += b; }
  friend CPoly operator-(CPoly a, const CPoly& b) { return a -= b; }
  friend CPoly operator*(const CPoly& a, const CPoly& b);
  friend bool operator==(const CPoly& a, const CPoly& b) { return a.terms_ == b.terms_; }

 private:
  void add_term(const Exponents& e, const ExtScalar& c);
  Terms terms_;
};

CPoly pow(const CPoly& base, unsigned exp);

/// Replaces every variable by the corresponding polynomial.
CPoly substitute(const CPoly& f, const std::array<CPoly, kVarCount>& replacement);

/// Exact evaluation at a point of the coefficient ring.
ExtScalar evaluate(const CPoly& f, const std::array<ExtScalar, kVarCount>& point);

/// Floating-point evaluation, s -> sqrt(radicand).
double evaluate(const CPoly& f, const std::array<double, kVarCount>& point);

}  // namespace opbianchi
