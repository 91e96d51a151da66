#include "doctest.h"
#include "opbianchi/expression.hpp"
#include "opbianchi/quantum_bianchi.hpp"
#include "test_support.hpp"

using namespace opbianchi;
using opbianchi::testing::random_rational;

namespace {

const Vec3 e1{1, 0, 0}, e2{0, 1, 0}, e3{0, 0, 1};

Vec3 random_vec() { return {random_rational(), random_rational(), random_rational()}; }

NCPoly gen(Generator g, const Rational& radicand) { return NCPoly::generator(g, radicand); }

NCPoly ap_am_commutator(const Rational& p0) {
  const Rational r = 2 * p0;
  return commutator(gen(Generator::Ap, r), gen(Generator::Am, r));
}

// Index-sum form of sum_cyc [x,[y,z]]: x^i y^j z^l mu^m_{ik} mu^k_{jl}, outer factor first.
JacobianTriple jacobian_by_index_sum(const QuantumStructureTensor& mu, const Vec3& x,
                                     const Vec3& y, const Vec3& z) {
  JacobianTriple out;
  const std::array<std::array<const Vec3*, 3>, 3> cyc{{{&x, &y, &z}, {&y, &z, &x}, {&z, &x, &y}}};
  for (std::size_t m = 0; m < 3; ++m) {
    NCPoly acc;
    for (const auto& [u, v, w] : cyc)
      for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
          for (std::size_t l = 0; l < 3; ++l) {
            const Rational scalar = (*u)[i] * (*v)[j] * (*w)[l];
            if (scalar == 0) continue;
            for (std::size_t k = 0; k < 3; ++k)
              acc = acc + NCPoly(ExtScalar(scalar)) * mu(m, i, k) * mu(k, j, l);
          }
    out.coords[m] = acc;
  }
  return out;
}

std::vector<BianchiType> sweep_types() {
  std::vector<BianchiType> types = bianchi_registry(Rational(1, 2));
  for (const auto& t : bianchi_registry(Rational(3, 2)))
    if (t.has_parameter() && t.tag() != BianchiTag::IIIa1) types.push_back(t);
  return types;
}

}  // namespace

TEST_CASE("quantized tables match the transcription") {
  for (const Rational& omega : {Rational(1), Rational(2)})
    for (const Rational& p0 : {Rational(1, 2), Rational(2), Rational(3)})
      for (const auto& t : sweep_types()) {
        CAPTURE(t.name());
        CHECK(quantize(t, omega, p0) == transcribed_quantum(t, omega, p0));
      }
}

TEST_CASE("quantized entry examples") {
  const Rational omega = 3, p0 = 2, r = 4;
  const auto ii = quantize(BianchiType::make(BianchiTag::II), omega, p0);
  CHECK(ii(0, 1, 2) == parse_ncpoly("(1/4)*P + (1/2)", r));
  CHECK(ii(1, 1, 2) == parse_ncpoly("(3/4)*Q", r));

  const auto ix = quantize(BianchiType::make(BianchiTag::IX), omega, p0);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      for (std::size_t k = 0; k < 3; ++k) CHECK(ix(i, j, k).is_constant());

  const auto v = quantize(BianchiType::make(BianchiTag::V), omega, p0);
  // 1/sqrt(4) = s/4 with s^2 = 4.
  CHECK(v(0, 0, 1) == parse_ncpoly("(1/4)*s*Am", r));
  CHECK(v(1, 0, 1) == parse_ncpoly("-(1/4)*s*Ap", r));
  CHECK(v(2, 1, 2) == parse_ncpoly("-(1/4)*s*Am", r));
  CHECK(v(2, 2, 0) == parse_ncpoly("(1/4)*s*Ap", r));
}

TEST_CASE("quantize_entry rejects ordering-ambiguous entries") {
  const CPoly q = CPoly::variable(Var::q), ap = CPoly::variable(Var::a_plus);
  CHECK_NOTHROW(quantize_entry(CPoly(2) * q + CPoly(1), 4));
  CHECK_THROWS_AS(quantize_entry(q * ap, 4), std::invalid_argument);
  CHECK_THROWS_AS(quantize_entry(q * q, 4), std::invalid_argument);
  CHECK_THROWS_AS(quantize_entry(q + ap, 4), std::invalid_argument);
}

TEST_CASE("quantum bracket examples") {
  const Rational omega = 1, p0 = 2;
  const auto v = quantize(BianchiType::make(BianchiTag::V), omega, p0);
  const auto b = quantum_bracket(v, e1, e2);
  CHECK(b[0] == v(0, 0, 1));
  CHECK(b[1] == v(1, 0, 1));
  CHECK(b[2].is_zero());
  for (int i = 0; i < 10; ++i) {
    const Vec3 x = random_vec();
    for (const auto& c : quantum_bracket(v, x, x)) CHECK(c.is_zero());
    for (const auto& c : quantum_bracket(quantize(BianchiType::make(BianchiTag::I), 1, 1), x,
                                         random_vec()))
      CHECK(c.is_zero());
  }
}

TEST_CASE("triple product") {
  CHECK(triple_product(e1, e2, e3) == 1);
  CHECK(triple_product(e1, e1, e3) == 0);
  CHECK(triple_product({1, 2, 0}, {0, 1, 1}, {1, 0, 1}) == 3);
  CHECK(triple_product(e2, e1, e3) == -1);
}

TEST_CASE("xi polynomials") {
  const Rational omega = 3, p0 = 2;
  const NCPoly xp = xi_pm(+1, omega, p0), xm = xi_pm(-1, omega, p0);
  CHECK(xp.terms().size() == 3);
  CHECK(xm.terms().size() == 3);
  CHECK(xp == parse_ncpoly("-2*Ap + 3*Q*Am + P*Ap", 4));
  CHECK(xm == parse_ncpoly("-2*Am + 3*Q*Ap - P*Am", 4));
  CHECK_THROWS(xi_pm(0, omega, p0));
  for (const NCPoly& x : {xp, xm}) CHECK(reduce_on_shell(commutative_image(x), omega, p0).is_zero());
}

TEST_CASE("Jacobian agrees with the index-sum oracle") {
  for (const auto& t : sweep_types()) {
    CAPTURE(t.name());
    const auto mu = quantize(t, 2, Rational(1, 2));
    CHECK(quantum_jacobian(mu, e1, e2, e3) == jacobian_by_index_sum(mu, e1, e2, e3));
    const Vec3 x = random_vec(), y = random_vec(), z = random_vec();
    CHECK(quantum_jacobian(mu, x, y, z) == jacobian_by_index_sum(mu, x, y, z));
  }
}

TEST_CASE("quantum Lie algebras II and VI: Jacobian is zero in the free algebra") {
  for (const Rational& omega : {Rational(1), Rational(2)})
    for (const Rational& p0 : {Rational(1, 2), Rational(2)})
      for (BianchiTag tag : {BianchiTag::II, BianchiTag::VI}) {
        const auto mu = quantize(BianchiType::make(tag), omega, p0);
        CHECK(quantum_jacobian(mu, e1, e2, e3).is_zero());
        CHECK(quantum_jacobian(mu, e1, e2, e3, JacobiForm::kNestedLeft).is_zero());
        CHECK(quantum_jacobian(mu, random_vec(), random_vec(), random_vec()).is_zero());
      }
}

TEST_CASE("first-type anomaly for IV and V") {
  for (const Rational& omega : {Rational(1), Rational(2)})
    for (const Rational& p0 : {Rational(1, 2), Rational(2)})
      for (BianchiTag tag : {BianchiTag::IV, BianchiTag::V}) {
        CAPTURE(tag_name(tag));
        const auto mu = quantize(BianchiType::make(tag), omega, p0);
        const auto j = quantum_jacobian(mu, e1, e2, e3);
        CHECK(j.coords[0].is_zero());
        CHECK(j.coords[1].is_zero());
        CHECK(j.coords[2] == NCPoly(ExtScalar(Rational(1) / p0)) * ap_am_commutator(p0));
        CHECK(j == first_type_anomaly(p0));
        for (int i = 0; i < 5; ++i) {
          const Vec3 x = random_vec(), y = random_vec(), z = random_vec();
          CHECK(quantum_jacobian(mu, x, y, z) == first_type_anomaly(p0).scaled(triple_product(x, y, z)));
        }
      }
}

TEST_CASE("second-type anomaly with tau = -1") {
  for (const Rational& omega : {Rational(1), Rational(2)})
    for (const Rational& p0 : {Rational(1, 2), Rational(2)}) {
      std::vector<BianchiType> types{BianchiType::make(BianchiTag::IIIa1)};
      for (const Rational a : {Rational(1, 2), Rational(3, 2)}) {
        types.push_back(BianchiType::make(BianchiTag::VIa, a));
        types.push_back(BianchiType::make(BianchiTag::VIIa, a));
      }
      for (const auto& t : types) {
        CAPTURE(t.name());
        const Rational a = t.a();
        const auto j = quantum_jacobian(quantize(t, omega, p0), e1, e2, e3);
        // -a / sqrt(2 p0^3) = -a / (p0 s).
        const ExtScalar s = ExtScalar::sqrt_of(2 * p0);
        const NCPoly factor(ExtScalar(Rational(-a / p0)) * s.inverse());
        CHECK(j.coords[0] == factor * xi_pm(+1, omega, p0));
        CHECK(j.coords[1] == factor * xi_pm(-1, omega, p0));
        CHECK(j.coords[2] == NCPoly(ExtScalar(Rational(a * a / p0))) * ap_am_commutator(p0));
        CHECK(j == second_type_anomaly(a, -1, omega, p0));
        CHECK_FALSE(j == second_type_anomaly(a, +1, omega, p0));
      }
    }
}

TEST_CASE("Jacobian is multilinear, alternating, and factors through the triple product") {
  for (const auto& t : sweep_types()) {
    CAPTURE(t.name());
    const auto mu = quantize(t, 2, 2);
    const auto base = quantum_jacobian(mu, e1, e2, e3);
    for (int i = 0; i < 4; ++i) {
      const Vec3 x = random_vec(), y = random_vec(), z = random_vec();
      const auto j = quantum_jacobian(mu, x, y, z);
      const Vec3 x2{2 * x[0], 2 * x[1], 2 * x[2]};
      CHECK(quantum_jacobian(mu, x2, y, z) == j.scaled(2));
      CHECK(quantum_jacobian(mu, x, x, z).is_zero());
      CHECK(quantum_jacobian(mu, x, y, y).is_zero());
      CHECK(quantum_jacobian(mu, y, x, z) == j.scaled(-1));
      CHECK(j == base.scaled(triple_product(x, y, z)));
    }
  }
}

TEST_CASE("classification") {
  for (const Rational& omega : {Rational(1), Rational(2)})
    for (const Rational& p0 : {Rational(1, 2), Rational(2)}) {
      auto kind = [&](BianchiTag tag, std::optional<Rational> a = std::nullopt) {
        return classify(BianchiType::make(tag, a), omega, p0).kind;
      };
      for (BianchiTag tag : {BianchiTag::I, BianchiTag::VII, BianchiTag::VIII, BianchiTag::IX})
        CHECK(kind(tag) == AnomalyKind::Rigid);
      CHECK(kind(BianchiTag::II) == AnomalyKind::QuantumLie);
      CHECK(kind(BianchiTag::VI) == AnomalyKind::QuantumLie);
      CHECK(kind(BianchiTag::IV) == AnomalyKind::AnomalousI);
      CHECK(kind(BianchiTag::V) == AnomalyKind::AnomalousI);
      for (const auto& [tag, a] : std::vector<std::pair<BianchiTag, Rational>>{
               {BianchiTag::VIa, Rational(3, 2)}, {BianchiTag::VIIa, Rational(1, 2)}}) {
        const auto cert = classify(BianchiType::make(tag, a), omega, p0);
        CHECK(cert.kind == AnomalyKind::AnomalousII);
        CHECK(cert.tau == -1);
        CHECK(cert.coordinate_matches == std::array<bool, 3>{true, true, true});
      }
      const auto iii = classify(BianchiType::make(BianchiTag::IIIa1), omega, p0);
      CHECK(iii.kind == AnomalyKind::AnomalousII);
      CHECK(iii.tau == -1);
    }
  CHECK(kind_name(AnomalyKind::AnomalousII) == "AnomalousII");
}

TEST_CASE("nested-left form reverses operator order in the second-type anomaly") {
  const Rational omega = 1, p0 = 2, a = Rational(1, 2);
  const auto t = BianchiType::make(BianchiTag::VIIa, a);
  // First-type anomalies and quantum Lie algebras are unaffected by the nesting.
  CHECK(classify(BianchiType::make(BianchiTag::V), omega, p0, JacobiForm::kNestedLeft).kind ==
        AnomalyKind::AnomalousI);
  const auto cert = classify(t, omega, p0, JacobiForm::kNestedLeft);
  CHECK(cert.kind == AnomalyKind::Unclassified);
  // Its first coordinate is +a/(p0 s) (omega Am Q + Ap P - p0 Ap): words reversed, sign flipped.
  const auto j = quantum_jacobian(quantize(t, omega, p0), e1, e2, e3, JacobiForm::kNestedLeft);
  const ExtScalar s = ExtScalar::sqrt_of(2 * p0);
  const NCPoly factor(ExtScalar(Rational(a / p0)) * s.inverse());
  CHECK(j.coords[0] == factor * parse_ncpoly("Am*Q + Ap*P - 2*Ap", 4));
}

TEST_CASE("classical limit of every certificate vanishes on-shell") {
  for (const Rational& omega : {Rational(1), Rational(2)})
    for (const Rational& p0 : {Rational(1, 2), Rational(2)})
      for (const auto& t : sweep_types()) {
        CAPTURE(t.name());
        const auto cert = classify(t, omega, p0);
        for (const auto& c : cert.jacobian.coords)
          CHECK(reduce_on_shell(commutative_image(c), omega, p0).is_zero());
      }
}
