#pragma once

#include <array>
#include <optional>
#include <string>

#include "opbianchi/bianchi.hpp"
#include "opbianchi/ncpoly.hpp"
#include "opbianchi/structure_tensor.hpp"

namespace opbianchi {

using QuantumStructureTensor = StructureTensor<NCPoly>;
using Vec3 = std::array<Rational, 3>;

/// Substitutes q -> Q, p -> P, A+ -> Ap, A- -> Am in the transcribed deformation.
/// Every entry must be affine in a single coordinate, so no ordering choice arises.
QuantumStructureTensor quantize(const BianchiType& t, const Rational& omega, const Rational& p0);

/// Operator-valued table, transcribed entry by entry.
QuantumStructureTensor transcribed_quantum(const BianchiType& t, const Rational& omega,
                                           const Rational& p0);

/// Word-by-word substitution of one polynomial entry. Throws when the entry
/// mixes coordinates or is not affine.
NCPoly quantize_entry(const CPoly& f, const Rational& radicand);

/// Component k is sum_ij mu(k, i, j) x^i y^j.
std::array<NCPoly, 3> quantum_bracket(const QuantumStructureTensor& mu, const Vec3& x,
                                      const Vec3& y);

/// How the iterated bracket in the Jacobian is nested. In both forms operator
/// coefficients multiply in the order their factors appear in the expression.
enum class JacobiForm {
  /// [x,[y,z]] + [y,[z,x]] + [z,[x,y]]: outer structure constant left of the inner one.
  kNestedRight,
  /// [[x,y],z] + [[y,z],x] + [[z,x],y]: inner coefficient left of the outer constant.
  kNestedLeft,
};

struct JacobianTriple {
  std::array<NCPoly, 3> coords;

  bool is_zero() const;
  JacobianTriple scaled(const Rational& factor) const;
  friend bool operator==(const JacobianTriple&, const JacobianTriple&) = default;
};

JacobianTriple quantum_jacobian(const QuantumStructureTensor& mu, const Vec3& x, const Vec3& y,
                                const Vec3& z, JacobiForm form = JacobiForm::kNestedRight);

/// Determinant of the matrix with rows x, y, z.
Rational triple_product(const Vec3& x, const Vec3& y, const Vec3& z);

/// xi+ = omega Q Am + (P - p0) Ap,  xi- = omega Q Ap - (P + p0) Am.
NCPoly xi_pm(int sign, const Rational& omega, const Rational& p0);

enum class AnomalyKind { Rigid, QuantumLie, AnomalousI, AnomalousII, Unclassified };

std::string kind_name(AnomalyKind kind);

struct AnomalyCertificate {
  BianchiType type;
  AnomalyKind kind = AnomalyKind::Unclassified;
  /// Fitted sign for the second-type pattern.
  std::optional<int> tau;
  /// Jacobian on (e1, e2, e3).
  JacobianTriple jacobian;
  /// Closed form the Jacobian was matched against, when a pattern applies.
  std::optional<JacobianTriple> closed_form;
  std::array<bool, 3> coordinate_matches{};
  std::string description;
};

AnomalyCertificate classify(const BianchiType& t, const Rational& omega, const Rational& p0,
                            JacobiForm form = JacobiForm::kNestedRight);

/// Closed forms of the two anomaly patterns.
JacobianTriple first_type_anomaly(const Rational& p0);
JacobianTriple second_type_anomaly(const Rational& a, int tau, const Rational& omega,
                                   const Rational& p0);

}  // namespace opbianchi
