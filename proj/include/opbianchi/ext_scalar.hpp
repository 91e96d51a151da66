#pragma once

#include <iosfwd>

#include "opbianchi/rational.hpp"

namespace opbianchi {

/// Element u + v*s of Q[s]/(s^2 - c), where c = 2*p0 is the radicand.
///
/// A radicand of 0 means "unbound": the value is a plain rational (v == 0)
/// and combines with any context. Combining two bound values with different
/// radicands throws ContextMismatch.
class ExtScalar {
 public:
  ExtScalar() = default;
  ExtScalar(int u) : u_(u) {}  // NOLINT(google-explicit-constructor)
  ExtScalar(Rational u) : u_(std::move(u)) {}  // NOLINT(google-explicit-constructor)
  ExtScalar(Rational u, Rational v, Rational radicand);

  /// The generator s itself, with s^2 = radicand.
  static ExtScalar sqrt_of(const Rational& radicand);

  const Rational& rational_part() const { return u_; }
  const Rational& sqrt_part() const { return v_; }
  const Rational& radicand() const { return c_; }
  bool is_bound() const { return sgn(c_) != 0; }

  bool is_zero() const { return sgn(u_) == 0 && sgn(v_) == 0; }
  bool is_rational() const { return sgn(v_) == 0; }

  /// Zero as a real number. Differs from is_zero() only when the radicand
  /// is a perfect square, where s is itself rational.
  bool is_real_zero() const;
  double to_double() const;

  /// Multiplicative inverse; throws std::domain_error for zero divisors.
  ExtScalar inverse() const;

  ExtScalar operator-() const;
  ExtScalar& operator+=(const ExtScalar& rhs);
  ExtScalar& operator-=(const ExtScalar& rhs);
  ExtScalar& operator*=(const ExtScalar& rhs);
  ExtScalar& operator/=(const ExtScalar& rhs) { return *this *= rhs.inverse(); }

  friend ExtScalar operator+(ExtScalar a, const ExtScalar& b) { return a += b; }
  friend ExtScalar operator-(ExtScalar a, const ExtScalar& b) { return a -= b; }
  friend ExtScalar operator*(ExtScalar a, const ExtScalar& b) { return a *= b; }
  friend ExtScalar operator/(ExtScalar a, const ExtScalar& b) { return a /= b; }
  friend bool operator==(const ExtScalar& a, const ExtScalar& b) {
    return a.u_ == b.u_ && a.v_ == b.v_;
  }

 private:
  void adopt_context(const ExtScalar& other);

  Rational u_;
  Rational v_;
  Rational c_;
};

/// Returns the common radicand of a and b (0 if both unbound).
Rational merge_radicands(const Rational& a, const Rational& b);

std::ostream& operator<<(std::ostream& os, const ExtScalar& x);

}  // namespace opbianchi
