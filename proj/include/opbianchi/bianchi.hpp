#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "opbianchi/lax.hpp"

namespace opbianchi {

enum class BianchiTag { I, II, VII, VI, IX, VIII, V, IV, VIIa, IIIa1, VIa };

/// All eleven tags, in table order.
std::span<const BianchiTag> all_bianchi_tags();

class BianchiType {
 public:
  /// a is required (and must be > 0) for VIIa and VIa, VIa also needs a != 1.
  /// IIIa1 accepts no a or a = 1. Other tags reject a.
  static BianchiType make(BianchiTag tag, std::optional<Rational> a = std::nullopt);

  BianchiTag tag() const { return tag_; }
  bool has_parameter() const;
  /// The parameter a (1 for IIIa1). Throws for parameterless tags.
  const Rational& a() const;
  std::optional<Rational> a_if_any() const { return a_; }
  std::string name() const;

  friend bool operator==(const BianchiType&, const BianchiType&) = default;

 private:
  BianchiType(BianchiTag tag, std::optional<Rational> a) : tag_(tag), a_(std::move(a)) {}
  BianchiTag tag_;
  std::optional<Rational> a_;
};

std::string tag_name(BianchiTag tag);

/// Accepts table names ("VII_a", "III_a=1", "VI_a") and short forms ("VIIa", "III", "VIa").
BianchiTag parse_bianchi_tag(std::string_view name);

/// All eleven types; parameterized ones get parameter a.
std::vector<BianchiType> bianchi_registry(const Rational& a);

/// (alpha, n1, n2, n3) of the structure equations
/// [e1,e2] = -alpha e2 + n3 e3, [e2,e3] = n1 e1, [e3,e1] = n2 e2 + alpha e3.
std::array<Rational, 4> structure_parameters(const BianchiType& t);

/// Table of constant structure constants.
StructureTensor<Rational> structure_constants(const BianchiType& t);

/// Deformation generated by the operadic Lax family: build_mu(solve_C(mu0)).
PolyStructureTensor deform(const BianchiType& t, const Rational& omega, const Rational& p0);

/// Table of time-dependent structure constants, transcribed entry by entry.
PolyStructureTensor transcribed_deformation(const BianchiType& t, const Rational& omega,
                                            const Rational& p0);

/// Rewrites f on the energy shell: q -> A+A-/omega, p -> (A+^2 - A-^2)/2,
/// then A-^2 -> 2 p0 - A+^2. The result is a canonical representative in
/// Q[s][A+, A-] of degree <= 1 in A-; it is zero iff f vanishes on-shell.
CPoly reduce_on_shell(const CPoly& f, const Rational& omega, const Rational& p0);

/// Jacobi defect on (e1,e2,e3), reduced on-shell.
std::array<CPoly, 3> classical_jacobian(const PolyStructureTensor& mu, const Rational& omega,
                                        const Rational& p0);

/// True iff the generated deformation is constant and equal to the table constants.
bool is_rigid(const BianchiType& t, const Rational& omega = 1, const Rational& p0 = 2);

PolyStructureTensor lift(const StructureTensor<Rational>& mu);
ExactStructureTensor lift_exact(const StructureTensor<Rational>& mu);

/// Exact value of a polynomial tensor at the t = 0 point.
ExactStructureTensor at_initial_point(const PolyStructureTensor& mu, const Rational& p0);

}  // namespace opbianchi
