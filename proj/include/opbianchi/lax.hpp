#pragma once

#include <array>
#include <optional>
#include <string>

#include "opbianchi/cpoly.hpp"
#include "opbianchi/ext_scalar.hpp"
#include "opbianchi/graded_operad.hpp"
#include "opbianchi/structure_tensor.hpp"

namespace opbianchi {

using PolyStructureTensor = StructureTensor<CPoly>;
using ExactStructureTensor = StructureTensor<ExtScalar>;

struct MatrixLaxPair {
  Operation L;
  Operation M;
};

/// M = (omega/2) [[0,-1,0],[1,0,0],[0,0,0]].
Operation lax_generator(const Rational& omega);

/// L = [[p, omega q, 0], [omega q, -p, 0], [0, 0, 1]] together with M.
MatrixLaxPair build_matrix_lax(const Rational& q, const Rational& p, const Rational& omega);

/// dL/dt - (ML - LM), with dL/dt taken from the oscillator equations of motion.
Operation matrix_lax_residual(const Rational& q, const Rational& p, const Rational& omega);

/// The nine parameters C1..C9 of the operadic Lax family.
struct LaxFamilyParams {
  std::array<ExtScalar, 9> c{};

  /// 1-based access, C(1) .. C(9).
  const ExtScalar& C(int nu) const { return c.at(static_cast<std::size_t>(nu - 1)); }
  ExtScalar& C(int nu) { return c.at(static_cast<std::size_t>(nu - 1)); }

  /// C2^2 + C3^2 + C5^2 + C6^2 + C7^2 + C8^2 != 0.
  bool admissible() const;

  friend bool operator==(const LaxFamilyParams&, const LaxFamilyParams&) = default;
};

inline constexpr const char* kNotOperadicLax = "not an operadic Lax representation";

struct LaxMultiplication {
  PolyStructureTensor mu;
  std::optional<std::string> diagnostic;
};

/// Multiplication mu(q, p, A+, A-) of the nine-parameter family, with the
/// coordinates kept formal. omega is folded into the coefficients.
LaxMultiplication build_mu(const LaxFamilyParams& params, const Rational& omega);

/// The same family evaluated at an exact point (q, p, A+, A-).
ExactStructureTensor build_mu(const LaxFamilyParams& params, const Rational& omega,
                              const std::array<ExtScalar, kVarCount>& point);

/// (q, p, A+, A-) at t = 0: (0, p0, sqrt(2 p0), 0), with sqrt(2 p0) = s.
std::array<ExtScalar, kVarCount> initial_point(const Rational& p0);

/// Initial structure constants implied by params (the linear system at t = 0).
ExactStructureTensor initial_constants(const LaxFamilyParams& params, const Rational& p0);

/// Unique parameters whose multiplication starts at mu0. Coefficients live in
/// Q[s]/(s^2 - 2 p0).
LaxFamilyParams solve_C(const ExactStructureTensor& mu0, const Rational& p0);

/// d/dt along the flow: qdot = p, pdot = -omega^2 q, A+dot = -(omega/2) A-,
/// A-dot = (omega/2) A+.
CPoly time_derivative(const CPoly& f, const Rational& omega);

/// dmu/dt - [M, mu]; identically zero for every parameter vector.
PolyStructureTensor operadic_lax_residual(const LaxFamilyParams& params, const Rational& omega);

}  // namespace opbianchi
