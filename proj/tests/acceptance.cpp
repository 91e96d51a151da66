// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>

#include "opbianchi/bianchi.hpp"
#include "opbianchi/oscillator.hpp"
#include "opbianchi/quantum_bianchi.hpp"
#include "test_support.hpp"

using namespace opbianchi;
using namespace opbianchi::testing;

namespace {

struct Outcome {
  bool passed = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      if (passed) detail << "first failure: " << what << "; ";
      passed = false;
    }
  }
};

const Vec3 e1{1, 0, 0}, e2{0, 1, 0}, e3{0, 0, 1};

Vec3 random_vec() { return {random_rational(), random_rational(), random_rational()}; }

NCPoly ap_am_commutator(const Rational& p0) {
  return commutator(NCPoly::generator(Generator::Ap, 2 * p0), NCPoly::generator(Generator::Am, 2 * p0));
}

BianchiType with_a(BianchiTag tag, const Rational& a) {
  if (tag == BianchiTag::VIIa || tag == BianchiTag::VIa) return BianchiType::make(tag, a);
  return BianchiType::make(tag);
}

void ac1(Outcome& o) {
  constexpr int kPoints = 1000;
  int nonzero = 0;
  for (int i = 0; i < kPoints; ++i) {
    if (!matrix_lax_residual(random_rational(), random_rational(), random_positive_rational()).is_zero())
      ++nonzero;
  }
  o.require(nonzero == 0, std::to_string(nonzero) + " nonzero residuals");
  o.detail << kPoints << " random rational (q, p, omega), exact residual zero at " << kPoints - nonzero;
}

void ac2(Outcome& o) {
  for (int nu = 1; nu <= 9; ++nu) {
    LaxFamilyParams c;
    c.C(nu) = 1;
    o.require(operadic_lax_residual(c, random_positive_rational()).is_zero(),
              "probe C" + std::to_string(nu));
  }
  for (int i = 0; i < 100; ++i) {
    const Rational radicand = 2 * random_positive_rational();
    LaxFamilyParams c;
    for (auto& x : c.c) x = ExtScalar(random_rational(), random_rational(), radicand);
    o.require(operadic_lax_residual(c, random_positive_rational()).is_zero(), "random vector " + std::to_string(i));
  }
  o.detail << "9 single-parameter probes and 100 random C vectors, symbolic residual zero";
}

void ac3(Outcome& o) {
  int rows = 0;
  for (const Rational& p0 : {Rational(1, 2), Rational(2), Rational(3)}) {
    for (const Rational& omega : {Rational(1), Rational(2)}) {
      for (const auto& t : bianchi_registry(Rational(3, 2))) {
        const auto mu0 = lift_exact(structure_constants(t));
        const auto mu = build_mu(solve_C(mu0, p0), omega, initial_point(p0));
        o.require(mu == mu0, t.name() + " round trip");
        o.require(deform(t, omega, p0) == transcribed_deformation(t, omega, p0), t.name() + " table row");
        ++rows;
      }
    }
  }
  o.detail << rows << " (type, omega, p0) cases: t = 0 values and generated rows match the tables";
}

void ac4(Outcome& o) {
  std::string rigid;
  for (const auto& t : bianchi_registry(Rational(1, 2))) {
    const BianchiTag tag = t.tag();
    const bool expected = tag == BianchiTag::I || tag == BianchiTag::VII || tag == BianchiTag::VIII ||
                          tag == BianchiTag::IX;
    const bool got = is_rigid(t);
    o.require(got == expected, t.name());
    if (got) rigid += (rigid.empty() ? "" : ", ") + t.name();
  }
  o.detail << "rigid types: {" << rigid << "}";
}

void ac5(Outcome& o) {
  double worst = 0;
  int cases = 0;
  const Rational omega = 1, p0 = 2;
  for (const Rational& a : {Rational(1, 2), Rational(1), Rational(3, 2)}) {
    for (BianchiTag tag : all_bianchi_tags()) {
      if (a == 1 && (tag == BianchiTag::VIa)) continue;  // a = 1 is the III_a=1 row
      const auto t = with_a(tag, a);
      const auto mu = deform(t, omega, p0);
      for (const auto& j : classical_jacobian(mu, omega, p0)) o.require(j.is_zero(), t.name() + " symbolic");
      const auto defect = jacobi_defect(mu);
      for (int k = 0; k < 100; ++k) {
        const double tk = (-0.995 + 1.99 * k / 99.0) * std::numbers::pi;
        const OscillatorState st = exact_flow(1.0, 2.0, tk);
        const QuasiCoords qc = quasi_coords(st);
        for (const auto& j : defect)
          worst = std::max(worst, std::abs(evaluate(j, std::array<double, 4>{st.q, st.p, qc.a_plus, qc.a_minus})));
      }
      ++cases;
    }
  }
  o.require(worst < 1e-10, "numeric defect too large");
  o.detail << cases << " (type, a) cases reduce to (0,0,0); max |J| along the flow = " << worst;
}

void ac6(Outcome& o) {
  for (const Rational& omega : {Rational(1), Rational(2)})
    for (const Rational& p0 : {Rational(1, 2), Rational(2)})
      for (BianchiTag tag : {BianchiTag::II, BianchiTag::VI}) {
        const auto j = quantum_jacobian(quantize(BianchiType::make(tag), omega, p0), e1, e2, e3);
        for (const auto& c : j.coords) o.require(c.terms().empty(), tag_name(tag));
      }
  o.detail << "II and VI, omega in {1,2}, p0 in {1/2,2}: all Jacobian coordinates structurally zero";
}

void ac7(Outcome& o) {
  int triples = 0;
  for (const Rational& omega : {Rational(1), Rational(2)})
    for (const Rational& p0 : {Rational(1, 2), Rational(2)})
      for (BianchiTag tag : {BianchiTag::IV, BianchiTag::V}) {
        const auto mu = quantize(BianchiType::make(tag), omega, p0);
        const NCPoly expected = NCPoly(ExtScalar(Rational(1 / p0))) * ap_am_commutator(p0);
        const auto j = quantum_jacobian(mu, e1, e2, e3);
        o.require(j.coords[0].is_zero() && j.coords[1].is_zero() && j.coords[2] == expected, tag_name(tag));
        for (int i = 0; i < 10; ++i, ++triples) {
          const Vec3 x = random_vec(), y = random_vec(), z = random_vec();
          const auto jr = quantum_jacobian(mu, x, y, z);
          const NCPoly scaled = NCPoly(ExtScalar(triple_product(x, y, z))) * expected;
          o.require(jr.coords[0].is_zero() && jr.coords[1].is_zero() && jr.coords[2] == scaled,
                    tag_name(tag) + " random triple");
        }
      }
  o.detail << "IV and V: J = (0, 0, (1/p0)[Ap,Am]) on the basis and on " << triples << " random triples";
}

void ac8(Outcome& o) {
  int cases = 0;
  for (const Rational& omega : {Rational(1), Rational(2)})
    for (const Rational& p0 : {Rational(1, 2), Rational(2)}) {
      std::vector<BianchiType> types{BianchiType::make(BianchiTag::IIIa1)};
      for (const Rational a : {Rational(1, 2), Rational(3, 2)}) {
        types.push_back(BianchiType::make(BianchiTag::VIa, a));
        types.push_back(BianchiType::make(BianchiTag::VIIa, a));
      }
      for (const auto& t : types) {
        const Rational a = t.a();
        // -a / sqrt(2 p0^3) with sqrt(2 p0^3) = p0 s.
        const NCPoly factor(ExtScalar(Rational(-a / p0)) * ExtScalar::sqrt_of(2 * p0).inverse());
        const auto j = quantum_jacobian(quantize(t, omega, p0), e1, e2, e3);
        o.require(j.coords[0] == factor * xi_pm(+1, omega, p0), t.name() + " J1");
        o.require(j.coords[1] == factor * xi_pm(-1, omega, p0), t.name() + " J2");
        o.require(j.coords[2] == NCPoly(ExtScalar(Rational(a * a / p0))) * ap_am_commutator(p0), t.name() + " J3");
        const auto cert = classify(t, omega, p0);
        o.require(cert.kind == AnomalyKind::AnomalousII && cert.tau == -1, t.name() + " classification");
        ++cases;
      }
    }
  o.detail << cases << " cases match (-a/sqrt(2p0^3) xi+, -a/sqrt(2p0^3) xi-, a^2/p0 [Ap,Am]), tau = -1";
}

void ac9(Outcome& o) {
  constexpr int kTriples = 200;
  for (int trial = 0; trial < kTriples; ++trial) {
    const std::size_t d = static_cast<std::size_t>(random_int(1, 3));
    const Operation f = random_operation(d, random_int(1, 3));
    const Operation g = random_operation(d, random_int(1, 3));
    const Operation h = random_operation(d, random_int(1, 3));
    const int F = f.reduced_degree(), G = g.reduced_degree(), H = h.reduced_degree();
    const Operation anti = gerstenhaber_bracket(f, g) +
                           gerstenhaber_bracket(g, f).signed_by(GradedSign::from_exponent(F * G));
    o.require(anti.is_zero(), "antisymmetry, trial " + std::to_string(trial));
    const Operation jac =
        gerstenhaber_bracket(f, gerstenhaber_bracket(g, h)).signed_by(GradedSign::from_exponent(F * H)) +
        gerstenhaber_bracket(g, gerstenhaber_bracket(h, f)).signed_by(GradedSign::from_exponent(G * F)) +
        gerstenhaber_bracket(h, gerstenhaber_bracket(f, g)).signed_by(GradedSign::from_exponent(H * G));
    o.require(jac.is_zero(), "Jacobi, trial " + std::to_string(trial));
  }
  o.detail << kTriples << " random triples, d <= 3, degree <= 3: both identities exact";
}

void ac10(Outcome& o) {
  // Unit amplitude: the RK4 error scales linearly with p0.
  const double omega = 1.0, p0 = 1.0, period = 2 * std::numbers::pi / omega;
  const auto traj = integrate_rk4(omega, p0, period, 1000);
  double rk4 = 0;
  for (std::size_t k = 0; k < traj.size(); ++k) {
    const auto ex = exact_flow(omega, p0, period * static_cast<double>(k) / 1000.0);
    rk4 = std::max({rk4, std::abs(traj[k].q - ex.q), std::abs(traj[k].p - ex.p)});
  }
  o.require(rk4 < 1e-10, "RK4 deviation");

  double rel = 0, deriv = 0;
  for (int k = 0; k <= 400; ++k) {
    const double t = (-0.999 + 1.998 * k / 400.0) * std::numbers::pi / omega;
    const auto st = exact_flow(omega, p0, t);
    const auto qc = quasi_coords(st);
    rel = std::max({rel, std::abs(omega * st.q - qc.a_plus * qc.a_minus),
                    std::abs(st.p - (qc.a_plus * qc.a_plus - qc.a_minus * qc.a_minus) / 2),
                    std::abs(p0 - (qc.a_plus * qc.a_plus + qc.a_minus * qc.a_minus) / 2)});
    const double h = 1e-6;
    const auto fwd = quasi_coords(exact_flow(omega, p0, t + h));
    const auto bwd = quasi_coords(exact_flow(omega, p0, t - h));
    const auto [dap, dam] = quasi_coords_derivative(qc, omega);
    deriv = std::max({deriv, std::abs((fwd.a_plus - bwd.a_plus) / (2 * h) - dap),
                      std::abs((fwd.a_minus - bwd.a_minus) / (2 * h) - dam)});
  }
  o.require(rel < 1e-12, "quasi-coordinate relations");
  o.require(deriv < 1e-6, "derivative");
  o.detail << "omega = p0 = 1: RK4 max deviation over all steps " << rk4 << "; relation residual " << rel << "; derivative error " << deriv;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria{
      {"matrix Lax identity", ac1},
      {"operadic Lax identity", ac2},
      {"initial-condition round trip", ac3},
      {"rigidity", ac4},
      {"classical Jacobi", ac5},
      {"quantum Lie algebras", ac6},
      {"anomaly of the first type", ac7},
      {"anomaly of the second type", ac8},
      {"Gerstenhaber structure", ac9},
      {"oscillator numerics", ac10},
  };
  std::cout << "seed " << test_seed() << '\n';
  int failures = 0;
  for (std::size_t n = 0; n < criteria.size(); ++n) {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      criteria[n].second(o);
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    failures += !o.passed;
    std::cout << "AC" << n + 1 << (n + 1 < 10 ? "  " : " ") << (o.passed ? "PASS" : "FAIL") << "  "
              << criteria[n].first << ": " << o.detail.str() << " (" << std::fixed
              << std::setprecision(2) << secs << " s)" << std::defaultfloat << '\n';
  }
  std::cout << (failures == 0 ? "all acceptance criteria passed" : std::to_string(failures) + " criteria failed")
            << '\n';
  return failures == 0 ? 0 : 1;
}
