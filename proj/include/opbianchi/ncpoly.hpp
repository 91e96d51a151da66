#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "opbianchi/cpoly.hpp"
#include "opbianchi/ext_scalar.hpp"

namespace opbianchi {

/// Operator symbols. Enum order is the canonical letter order.
enum class Generator : std::uint8_t { Q = 0, P = 1, Ap = 2, Am = 3 };

using Word = std::vector<Generator>;

/// Shorter words first, then lexicographic in generator order.
struct WordOrder {
  bool operator()(const Word& a, const Word& b) const;
};

/// Element of the free associative algebra on {Q, P, Ap, Am} over
/// Q[s]/(s^2 - 2 p0). No relations between generators are ever applied.
class NCPoly {
 public:
  using Terms = std::map<Word, ExtScalar, WordOrder>;

  NCPoly() = default;
  NCPoly(int c) : NCPoly(ExtScalar(c)) {}  // NOLINT(google-explicit-constructor)
  NCPoly(ExtScalar c);                      // NOLINT(google-explicit-constructor)

  static NCPoly generator(Generator g, const Rational& radicand = 0);
  static NCPoly word(Word w, ExtScalar coeff = ExtScalar(1));

  /// Radicand 2*p0 this polynomial is bound to, 0 when unbound.
  const Rational& radicand() const { return radicand_; }
  NCPoly with_radicand(const Rational& radicand) const;

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  ExtScalar coefficient(const Word& w) const;

  NCPoly operator-() const;
  NCPoly& operator+=(const NCPoly& rhs);
  NCPoly& operator-=(const NCPoly& rhs);
  NCPoly& operator*=(const NCPoly& rhs);
  friend NCPoly operator+(NCPoly a, const NCPoly& b) { return a += b; }
  friend NCPoly operator-(NCPoly a, const NCPoly& b) { return a -= b; }
  friend NCPoly operator*(const NCPoly& a, const NCPoly& b);
  friend bool operator==(const NCPoly& a, const NCPoly& b) { return a.terms_ == b.terms_; }

 private:
  void add_term(const Word& w, const ExtScalar& c);

  Terms terms_;
  Rational radicand_;
};

NCPoly nc_add(const NCPoly& f, const NCPoly& g);
NCPoly nc_mul(const NCPoly& f, const NCPoly& g);
NCPoly commutator(const NCPoly& f, const NCPoly& g);

/// Abelianization: Q -> q, P -> p, Ap -> A+, Am -> A-.
CPoly commutative_image(const NCPoly& f);

}  // namespace opbianchi
