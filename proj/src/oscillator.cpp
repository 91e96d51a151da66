#include "opbianchi/oscillator.hpp"

#include <cmath>
#include <string>

namespace opbianchi {

namespace {

void require_positive(double omega, double p0) {
  if (!(omega > 0.0)) throw std::invalid_argument("omega must be positive");
  if (!(p0 > 0.0)) throw std::invalid_argument("p0 must be positive");
}

}  // namespace

OscillatorState exact_flow(double omega, double p0, double t) {
  require_positive(omega, p0);
  return OscillatorState{p0 / omega * std::sin(omega * t), p0 * std::cos(omega * t), omega, p0};
}

std::vector<OscillatorState> integrate_rk4(double omega, double p0, double t_end, int steps) {
  require_positive(omega, p0);
  if (steps < 1) throw std::invalid_argument("RK4 needs at least one step");
  const double h = t_end / steps;
  const double w2 = omega * omega;
  std::vector<OscillatorState> out;
  out.reserve(static_cast<std::size_t>(steps) + 1);
  double q = 0.0;
  double p = p0;
  out.push_back({q, p, omega, p0});
  for (int i = 0; i < steps; ++i) {
    const double k1q = p;
    const double k1p = -w2 * q;
    const double k2q = p + 0.5 * h * k1p;
    const double k2p = -w2 * (q + 0.5 * h * k1q);
    const double k3q = p + 0.5 * h * k2p;
    const double k3p = -w2 * (q + 0.5 * h * k2q);
    const double k4q = p + h * k3p;
    const double k4p = -w2 * (q + h * k3q);
    q += h / 6.0 * (k1q + 2.0 * k2q + 2.0 * k3q + k4q);
    p += h / 6.0 * (k1p + 2.0 * k2p + 2.0 * k3p + k4p);
    out.push_back({q, p, omega, p0});
  }
  return out;
}

QuasiCoords quasi_coords(const OscillatorState& state) {
  const double sum = state.p0 + state.p;
  if (!(sum > 0.0)) {
    throw BranchSingularity("A+ = sqrt(p0 + p) vanishes at p = " + std::to_string(state.p));
  }
  if (state.p >= 0.0) {
    const double a_plus = std::sqrt(sum);
    return QuasiCoords{a_plus, state.omega * state.q / a_plus};
  }
  // On-shell p0 + p = (omega q)^2 / (p0 - p); this form avoids the cancellation near p = -p0.
  const double wq = state.omega * state.q;
  const double root = std::sqrt(state.p0 - state.p);
  const double a_plus = std::abs(wq) / root;
  if (!(a_plus > 0.0)) throw BranchSingularity("A+ vanishes off the energy shell");
  return QuasiCoords{a_plus, std::copysign(root, wq)};
}

std::pair<double, double> quasi_coords_derivative(const QuasiCoords& qc, double omega) {
  return {-0.5 * omega * qc.a_minus, 0.5 * omega * qc.a_plus};
}

}  // namespace opbianchi
