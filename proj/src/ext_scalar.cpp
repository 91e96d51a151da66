#include "opbianchi/ext_scalar.hpp"

#include <cmath>
#include <ostream>

#include "opbianchi/expression.hpp"

namespace opbianchi {

Rational merge_radicands(const Rational& a, const Rational& b) {
  if (sgn(a) == 0) return b;
  if (sgn(b) == 0 || a == b) return a;
  throw ContextMismatch("sqrt context mismatch: s^2 = " + to_string(a) + " vs s^2 = " +
                        to_string(b));
}

ExtScalar::ExtScalar(Rational u, Rational v, Rational radicand)
    : u_(std::move(u)), v_(std::move(v)), c_(std::move(radicand)) {
  if (sgn(c_) < 0) throw std::invalid_argument("radicand must be positive");
  if (sgn(c_) == 0 && sgn(v_) != 0) {
    throw std::invalid_argument("sqrt part requires a bound radicand");
  }
}

ExtScalar ExtScalar::sqrt_of(const Rational& radicand) {
  if (sgn(radicand) <= 0) throw std::invalid_argument("radicand must be positive");
  return ExtScalar(Rational(0), Rational(1), radicand);
}

void ExtScalar::adopt_context(const ExtScalar& other) { c_ = merge_radicands(c_, other.c_); }

bool ExtScalar::is_real_zero() const {
  if (is_zero()) return true;
  if (sgn(v_) == 0) return false;
  Rational root;
  if (!is_perfect_square(c_, &root)) return false;
  return u_ + v_ * root == 0;
}

double ExtScalar::to_double() const {
  if (sgn(v_) == 0) return u_.get_d();
  return u_.get_d() + v_.get_d() * std::sqrt(c_.get_d());
}

ExtScalar ExtScalar::inverse() const {
  // (u + v s)^-1 = (u - v s) / (u^2 - v^2 c)
  Rational norm = u_ * u_ - v_ * v_ * c_;
  if (sgn(norm) == 0) throw std::domain_error("ExtScalar is not invertible");
  ExtScalar r;
  r.u_ = u_ / norm;
  r.v_ = -v_ / norm;
  r.c_ = c_;
  return r;
}

ExtScalar ExtScalar::operator-() const {
  ExtScalar r = *this;
  r.u_ = -u_;
  r.v_ = -v_;
  return r;
}

ExtScalar& ExtScalar::operator+=(const ExtScalar& rhs) {
  adopt_context(rhs);
  u_ += rhs.u_;
  v_ += rhs.v_;
  return *this;
}

ExtScalar& ExtScalar::operator-=(const ExtScalar& rhs) {
  adopt_context(rhs);
  u_ -= rhs.u_;
  v_ -= rhs.v_;
  return *this;
}

ExtScalar& ExtScalar::operator*=(const ExtScalar& rhs) {
  adopt_context(rhs);
  Rational u = u_ * rhs.u_ + v_ * rhs.v_ * c_;
  Rational v = u_ * rhs.v_ + v_ * rhs.u_;
  u_ = std::move(u);
  v_ = std::move(v);
  return *this;
}

std::ostream& operator<<(std::ostream& os, const ExtScalar& x) { return os << format_scalar(x); }

}  // namespace opbianchi
