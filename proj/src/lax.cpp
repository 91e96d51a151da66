#include "opbianchi/lax.hpp"

namespace opbianchi {

namespace {

void require_positive_omega(const Rational& omega) {
  if (sgn(omega) <= 0) throw std::invalid_argument("omega must be positive");
}

void require_positive_p0(const Rational& p0) {
  if (sgn(p0) <= 0) throw std::invalid_argument("p0 must be positive");
}

Operation matrix(const std::array<Rational, 9>& rows) {
  return Operation(3, 1, std::vector<Rational>(rows.begin(), rows.end()));
}

}  // namespace

Operation lax_generator(const Rational& omega) {
  require_positive_omega(omega);
  const Rational h = omega / 2;
  return matrix({0, -h, 0, h, 0, 0, 0, 0, 0});
}

MatrixLaxPair build_matrix_lax(const Rational& q, const Rational& p, const Rational& omega) {
  require_positive_omega(omega);
  const Rational wq = omega * q;
  return MatrixLaxPair{matrix({p, wq, 0, wq, -p, 0, 0, 0, 1}), lax_generator(omega)};
}

Operation matrix_lax_residual(const Rational& q, const Rational& p, const Rational& omega) {
  const auto [L, M] = build_matrix_lax(q, p, omega);
  const Rational qdot = p;
  const Rational pdot = -omega * omega * q;
  const Rational wqdot = omega * qdot;
  const Operation dL = matrix({pdot, wqdot, 0, wqdot, -pdot, 0, 0, 0, 0});
  return dL - gerstenhaber_bracket(M, L);
}

bool LaxFamilyParams::admissible() const {
  for (int nu : {2, 3, 5, 6, 7, 8}) {
    if (!C(nu).is_real_zero()) return true;
  }
  return false;
}

LaxMultiplication build_mu(const LaxFamilyParams& params, const Rational& omega) {
  const CPoly q = CPoly::variable(Var::q);
  const CPoly p = CPoly::variable(Var::p);
  const CPoly ap = CPoly::variable(Var::a_plus);
  const CPoly am = CPoly::variable(Var::a_minus);
  const CPoly wq = CPoly(omega) * q;
  auto c = [&](int nu) { return CPoly(params.C(nu)); };

  PolyStructureTensor mu;
  mu.set_antisymmetric(0, 1, 2, c(2) * p - c(3) * wq - c(4));
  mu.set_antisymmetric(1, 0, 2, c(2) * p - c(3) * wq + c(4));
  mu.set_antisymmetric(0, 2, 0, c(2) * wq + c(3) * p - c(1));
  mu.set_antisymmetric(1, 1, 2, c(2) * wq + c(3) * p + c(1));
  mu.set_antisymmetric(0, 0, 1, c(5) * ap + c(6) * am);
  mu.set_antisymmetric(1, 0, 1, c(5) * am - c(6) * ap);
  mu.set_antisymmetric(2, 0, 2, c(7) * ap + c(8) * am);
  mu.set_antisymmetric(2, 1, 2, c(7) * am - c(8) * ap);
  mu.set_antisymmetric(2, 0, 1, c(9));

  LaxMultiplication out{std::move(mu), std::nullopt};
  if (!params.admissible()) out.diagnostic = kNotOperadicLax;
  return out;
}

ExactStructureTensor build_mu(const LaxFamilyParams& params, const Rational& omega,
                              const std::array<ExtScalar, kVarCount>& point) {
  return build_mu(params, omega).mu.map([&](const CPoly& f) { return evaluate(f, point); });
}

std::array<ExtScalar, kVarCount> initial_point(const Rational& p0) {
  require_positive_p0(p0);
  const Rational radicand = 2 * p0;
  return {ExtScalar(Rational(0), Rational(0), radicand), ExtScalar(p0, Rational(0), radicand),
          ExtScalar::sqrt_of(radicand), ExtScalar(Rational(0), Rational(0), radicand)};
}

ExactStructureTensor initial_constants(const LaxFamilyParams& params, const Rational& p0) {
  require_positive_p0(p0);
  const ExtScalar s = ExtScalar::sqrt_of(2 * p0);
  const ExtScalar P0(p0);
  ExactStructureTensor mu0;
  mu0.set_antisymmetric(0, 1, 2, params.C(2) * P0 - params.C(4));
  mu0.set_antisymmetric(0, 2, 0, params.C(3) * P0 - params.C(1));
  mu0.set_antisymmetric(0, 0, 1, params.C(5) * s);
  mu0.set_antisymmetric(1, 0, 2, params.C(2) * P0 + params.C(4));
  mu0.set_antisymmetric(1, 0, 1, -params.C(6) * s);
  mu0.set_antisymmetric(1, 1, 2, params.C(3) * P0 + params.C(1));
  mu0.set_antisymmetric(2, 0, 2, params.C(7) * s);
  mu0.set_antisymmetric(2, 1, 2, -params.C(8) * s);
  mu0.set_antisymmetric(2, 0, 1, params.C(9));
  return mu0;
}

LaxFamilyParams solve_C(const ExactStructureTensor& mu0, const Rational& p0) {
  require_positive_p0(p0);
  if (!mu0.is_antisymmetric()) throw std::invalid_argument("initial tensor is not antisymmetric");
  const ExtScalar s = ExtScalar::sqrt_of(2 * p0);
  const ExtScalar inv_s = s.inverse();
  const ExtScalar half(Rational(1, 2));
  const ExtScalar inv_2p0(Rational(1) / (2 * p0));

  LaxFamilyParams c;
  c.C(1) = half * (mu0(1, 1, 2) - mu0(0, 2, 0));
  c.C(2) = inv_2p0 * (mu0(1, 0, 2) + mu0(0, 1, 2));
  c.C(3) = inv_2p0 * (mu0(1, 1, 2) + mu0(0, 2, 0));
  c.C(4) = half * (mu0(1, 0, 2) - mu0(0, 1, 2));
  c.C(5) = inv_s * mu0(0, 0, 1);
  c.C(6) = -inv_s * mu0(1, 0, 1);
  c.C(7) = inv_s * mu0(2, 0, 2);
  c.C(8) = -inv_s * mu0(2, 1, 2);
  c.C(9) = mu0(2, 0, 1);
  return c;
}

CPoly time_derivative(const CPoly& f, const Rational& omega) {
  const CPoly q = CPoly::variable(Var::q);
  const CPoly p = CPoly::variable(Var::p);
  const CPoly ap = CPoly::variable(Var::a_plus);
  const CPoly am = CPoly::variable(Var::a_minus);
  const CPoly half_w(Rational(omega / 2));
  return f.derivative(Var::q) * p - f.derivative(Var::p) * (CPoly(Rational(omega * omega)) * q) -
         f.derivative(Var::a_plus) * (half_w * am) + f.derivative(Var::a_minus) * (half_w * ap);
}

PolyStructureTensor operadic_lax_residual(const LaxFamilyParams& params, const Rational& omega) {
  const PolyStructureTensor mu = build_mu(params, omega).mu;
  const BasicOperation<CPoly> M =
      lax_generator(omega).map([](const Rational& r) { return CPoly(r); });
  const BasicOperation<CPoly> dmu =
      mu.operation().map([&](const CPoly& f) { return time_derivative(f, omega); });
  return PolyStructureTensor(dmu - gerstenhaber_bracket(M, mu.operation()));
}

}  // namespace opbianchi
