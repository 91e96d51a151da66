#include "opbianchi/quantum_bianchi.hpp"

#include <stdexcept>

namespace opbianchi {

namespace {

StructureTensor<NCPoly> from_row(const std::array<NCPoly, 9>& row) {
  StructureTensor<NCPoly> mu;
  for (std::size_t n = 0; n < 9; ++n) {
    const auto& idx = kIndependentEntries[n];
    mu.set_antisymmetric(idx[0], idx[1], idx[2], row[n]);
  }
  return mu;
}

std::array<NCPoly, 3> lift_vector(const Vec3& v) {
  return {NCPoly(ExtScalar(v[0])), NCPoly(ExtScalar(v[1])), NCPoly(ExtScalar(v[2]))};
}

// [u, v]^m = sum_jk u^j mu(m, j, k) v^k, factors multiplied left to right.
std::array<NCPoly, 3> ordered_bracket(const QuantumStructureTensor& mu,
                                      const std::array<NCPoly, 3>& u,
                                      const std::array<NCPoly, 3>& v) {
  std::array<NCPoly, 3> out;
  for (std::size_t m = 0; m < 3; ++m) {
    for (std::size_t j = 0; j < 3; ++j) {
      if (u[j].is_zero()) continue;
      for (std::size_t k = 0; k < 3; ++k) {
        if (v[k].is_zero() || mu(m, j, k).is_zero()) continue;
        out[m] += u[j] * mu(m, j, k) * v[k];
      }
    }
  }
  return out;
}

NCPoly scalar(const ExtScalar& c) { return NCPoly(c); }
NCPoly scalar(const Rational& r) { return NCPoly(ExtScalar(r)); }

}  // namespace

NCPoly quantize_entry(const CPoly& f, const Rational& radicand) {
  NCPoly out = NCPoly(0).with_radicand(radicand);
  std::optional<std::size_t> seen;
  for (const auto& [e, c] : f.terms()) {
    int degree = 0;
    for (std::size_t i = 0; i < kVarCount; ++i) {
      if (e[i] == 0) continue;
      degree += e[i];
      if (seen && *seen != i) {
        throw std::invalid_argument("entry mixes coordinates; operator ordering is ambiguous");
      }
      seen = i;
    }
    if (degree > 1) throw std::invalid_argument("entry is not affine in its coordinate");
    Word w;
    if (degree == 1) w.push_back(static_cast<Generator>(*seen));
    out += NCPoly::word(std::move(w), c);
  }
  return out;
}

QuantumStructureTensor quantize(const BianchiType& t, const Rational& omega, const Rational& p0) {
  const Rational radicand = 2 * p0;
  return transcribed_deformation(t, omega, p0).map(
      [&](const CPoly& f) { return quantize_entry(f, radicand); });
}

QuantumStructureTensor transcribed_quantum(const BianchiType& t, const Rational& omega,
                                           const Rational& p0) {
  if (sgn(p0) <= 0) throw std::invalid_argument("p0 must be positive");
  const Rational radicand = 2 * p0;
  const NCPoly Q = NCPoly::generator(Generator::Q, radicand);
  const NCPoly P = NCPoly::generator(Generator::P, radicand);
  const NCPoly Ap = NCPoly::generator(Generator::Ap, radicand);
  const NCPoly Am = NCPoly::generator(Generator::Am, radicand);
  const NCPoly w = scalar(omega);
  const NCPoly P0 = scalar(p0);
  const NCPoly inv_s = scalar(ExtScalar::sqrt_of(radicand).inverse());
  const NCPoly inv_2p0 = scalar(Rational(1) / (2 * p0));
  const NCPoly inv_m2p0 = scalar(Rational(-1) / (2 * p0));
  const NCPoly inv_p0 = scalar(Rational(1) / p0);
  const NCPoly a = t.has_parameter() ? scalar(t.a()) : NCPoly(1);

  // Columns: mu1_12 mu2_12 mu3_12 | mu1_23 mu2_23 mu3_23 | mu1_31 mu2_31 mu3_31
  std::array<NCPoly, 9> row{};
  switch (t.tag()) {
    case BianchiTag::I:
      break;
    case BianchiTag::II:
      row = {0, 0, 0, (P + P0) * inv_2p0, w * Q * inv_2p0, 0,
             w * Q * inv_2p0, (P - P0) * inv_m2p0, 0};
      break;
    case BianchiTag::VII:
      row = {0, 0, 0, 1, 0, 0, 0, 1, 0};
      break;
    case BianchiTag::VI:
      row = {0, 0, 0, P * inv_p0, w * Q * inv_p0, 0, w * Q * inv_p0, -(P * inv_p0), 0};
      break;
    case BianchiTag::IX:
      row = {0, 0, 1, 1, 0, 0, 0, 1, 0};
      break;
    case BianchiTag::VIII:
      row = {0, 0, -1, 1, 0, 0, 0, 1, 0};
      break;
    case BianchiTag::V:
      row = {Am * inv_s, -Ap * inv_s, 0, 0, 0, -Am * inv_s, 0, 0, Ap * inv_s};
      break;
    case BianchiTag::IV:
      row = {Am * inv_s, -Ap * inv_s, 1, 0, 0, -Am * inv_s, 0, 0, Ap * inv_s};
      break;
    case BianchiTag::VIIa:
      row = {a * Am * inv_s,      -a * Ap * inv_s,  1,
             (P - P0) * inv_m2p0, w * Q * inv_m2p0, -a * Am * inv_s,
             w * Q * inv_m2p0,    (P + P0) * inv_2p0, a * Ap * inv_s};
      break;
    case BianchiTag::IIIa1:
      row = {Am * inv_s,          -Ap * inv_s,      -1,
             (P - P0) * inv_m2p0, w * Q * inv_m2p0, -Am * inv_s,
             w * Q * inv_m2p0,    (P + P0) * inv_2p0, Ap * inv_s};
      break;
    case BianchiTag::VIa:
      row = {a * Am * inv_s,      -a * Ap * inv_s,  -1,
             (P - P0) * inv_m2p0, w * Q * inv_m2p0, -a * Am * inv_s,
             w * Q * inv_m2p0,    (P + P0) * inv_2p0, a * Ap * inv_s};
      break;
  }
  return from_row(row);
}

std::array<NCPoly, 3> quantum_bracket(const QuantumStructureTensor& mu, const Vec3& x,
                                      const Vec3& y) {
  return ordered_bracket(mu, lift_vector(x), lift_vector(y));
}

bool JacobianTriple::is_zero() const {
  return coords[0].is_zero() && coords[1].is_zero() && coords[2].is_zero();
}

JacobianTriple JacobianTriple::scaled(const Rational& factor) const {
  JacobianTriple r = *this;
  for (auto& c : r.coords) c = NCPoly(ExtScalar(factor)) * c;
  return r;
}

JacobianTriple quantum_jacobian(const QuantumStructureTensor& mu, const Vec3& x, const Vec3& y,
                                const Vec3& z, JacobiForm form) {
  const auto X = lift_vector(x);
  const auto Y = lift_vector(y);
  const auto Z = lift_vector(z);
  const std::array<const std::array<NCPoly, 3>*, 3> args = {&X, &Y, &Z};

  JacobianTriple out;
  for (std::size_t c = 0; c < 3; ++c) {
    const auto& first = *args[c];
    const auto& second = *args[(c + 1) % 3];
    const auto& third = *args[(c + 2) % 3];
    std::array<NCPoly, 3> term;
    if (form == JacobiForm::kNestedRight) {
      term = ordered_bracket(mu, first, ordered_bracket(mu, second, third));
    } else {
      term = ordered_bracket(mu, ordered_bracket(mu, first, second), third);
    }
    for (std::size_t m = 0; m < 3; ++m) out.coords[m] += term[m];
  }
  return out;
}

Rational triple_product(const Vec3& x, const Vec3& y, const Vec3& z) {
  return x[0] * (y[1] * z[2] - y[2] * z[1]) - x[1] * (y[0] * z[2] - y[2] * z[0]) +
         x[2] * (y[0] * z[1] - y[1] * z[0]);
}

NCPoly xi_pm(int sign, const Rational& omega, const Rational& p0) {
  if (sign != 1 && sign != -1) throw std::invalid_argument("xi sign must be +1 or -1");
  const Rational radicand = 2 * p0;
  const NCPoly Q = NCPoly::generator(Generator::Q, radicand);
  const NCPoly P = NCPoly::generator(Generator::P, radicand);
  const NCPoly same = NCPoly::generator(sign > 0 ? Generator::Ap : Generator::Am, radicand);
  const NCPoly other = NCPoly::generator(sign > 0 ? Generator::Am : Generator::Ap, radicand);
  const NCPoly sgn_poly = scalar(Rational(sign));
  // omega Q A_mp +- (P -+ p0) A_pm
  return scalar(omega) * Q * other + sgn_poly * (P - sgn_poly * scalar(p0)) * same;
}

std::string kind_name(AnomalyKind kind) {
  switch (kind) {
    case AnomalyKind::Rigid: return "Rigid";
    case AnomalyKind::QuantumLie: return "QuantumLie";
    case AnomalyKind::AnomalousI: return "AnomalousI";
    case AnomalyKind::AnomalousII: return "AnomalousII";
    case AnomalyKind::Unclassified: return "Unclassified";
  }
  throw std::logic_error("unknown anomaly kind");
}

JacobianTriple first_type_anomaly(const Rational& p0) {
  const Rational radicand = 2 * p0;
  const NCPoly comm = commutator(NCPoly::generator(Generator::Ap, radicand),
                                 NCPoly::generator(Generator::Am, radicand));
  return JacobianTriple{{NCPoly(0).with_radicand(radicand), NCPoly(0).with_radicand(radicand),
                         scalar(Rational(1) / p0) * comm}};
}

JacobianTriple second_type_anomaly(const Rational& a, int tau, const Rational& omega,
                                   const Rational& p0) {
  const Rational radicand = 2 * p0;
  // sqrt(2 p0^3) = p0 s
  const ExtScalar sqrt_2p0_cubed = ExtScalar(p0) * ExtScalar::sqrt_of(radicand);
  const NCPoly factor = scalar(ExtScalar(a * tau) * sqrt_2p0_cubed.inverse());
  const NCPoly comm = commutator(NCPoly::generator(Generator::Ap, radicand),
                                 NCPoly::generator(Generator::Am, radicand));
  return JacobianTriple{{factor * xi_pm(+1, omega, p0), factor * xi_pm(-1, omega, p0),
                         scalar(a * a / p0) * comm}};
}

AnomalyCertificate classify(const BianchiType& t, const Rational& omega, const Rational& p0,
                            JacobiForm form) {
  const QuantumStructureTensor mu = quantize(t, omega, p0);
  AnomalyCertificate cert{t, AnomalyKind::Unclassified, std::nullopt,
                          quantum_jacobian(mu, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}, form),
                          std::nullopt, {}, {}};

  auto match = [&](const JacobianTriple& expected) {
    for (std::size_t m = 0; m < 3; ++m) {
      cert.coordinate_matches[m] = cert.jacobian.coords[m] == expected.coords[m];
    }
    cert.closed_form = expected;
    return cert.coordinate_matches[0] && cert.coordinate_matches[1] &&
           cert.coordinate_matches[2];
  };

  bool constant = true;
  for (const NCPoly& f : mu.operation().coefficients()) constant = constant && f.is_constant();
  const auto table = structure_constants(t).map([](const Rational& r) { return NCPoly(ExtScalar(r)); });
  if (constant && mu == table && cert.jacobian.is_zero()) {
    cert.kind = AnomalyKind::Rigid;
    match(JacobianTriple{});
    cert.description = "constant structure constants equal to the undeformed algebra";
    return cert;
  }
  if (cert.jacobian.is_zero()) {
    cert.kind = AnomalyKind::QuantumLie;
    match(JacobianTriple{});
    cert.description = "all Jacobian coordinates vanish in the free algebra";
    return cert;
  }
  if (match(first_type_anomaly(p0))) {
    cert.kind = AnomalyKind::AnomalousI;
    cert.description = "J1 = J2 = 0, J3 = (x|y|z)/p0 [Ap,Am]";
    return cert;
  }
  if (t.has_parameter() || t.tag() == BianchiTag::IIIa1) {
    for (int tau : {-1, 1}) {
      if (match(second_type_anomaly(t.a(), tau, omega, p0))) {
        cert.kind = AnomalyKind::AnomalousII;
        cert.tau = tau;
        cert.description = "J1,2 = a tau (x|y|z)/sqrt(2 p0^3) xi+-, J3 = a^2 (x|y|z)/p0 [Ap,Am]";
        return cert;
      }
    }
    match(second_type_anomaly(t.a(), -1, omega, p0));
  } else {
    match(first_type_anomaly(p0));
  }
  cert.kind = AnomalyKind::Unclassified;
  cert.description = "Jacobian matches none of the known patterns";
  return cert;
}

}  // namespace opbianchi
