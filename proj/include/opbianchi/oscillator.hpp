#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

namespace opbianchi {

/// Thrown when A+ = sqrt(p0 + p) vanishes (p <= -p0) and A- is undefined.
class BranchSingularity : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

struct OscillatorState {
  double q = 0.0;
  double p = 0.0;
  double omega = 1.0;
  double p0 = 1.0;

  /// H = (p^2 + omega^2 q^2) / 2.
  double energy() const { return 0.5 * (p * p + omega * omega * q * q); }
};

struct QuasiCoords {
  double a_plus = 0.0;
  double a_minus = 0.0;
};

/// Closed-form trajectory with q(0) = 0, p(0) = p0.
OscillatorState exact_flow(double omega, double p0, double t);

/// Classical RK4 on dq/dt = p, dp/dt = -omega^2 q. Returns steps + 1 states,
/// the first being the initial condition.
std::vector<OscillatorState> integrate_rk4(double omega, double p0, double t_end, int steps);

/// Principal branch A+ = sqrt(p0 + p), A- = omega q / A+. Expects an on-shell state.
QuasiCoords quasi_coords(const OscillatorState& state);

/// (dA+/dt, dA-/dt) = (-(omega/2) A-, (omega/2) A+).
std::pair<double, double> quasi_coords_derivative(const QuasiCoords& qc, double omega);

}  // namespace opbianchi
