#include "opbianchi/bianchi.hpp"

#include <stdexcept>

namespace opbianchi {

namespace {

constexpr std::array<BianchiTag, 11> kTags = {
    BianchiTag::I, BianchiTag::II, BianchiTag::VII,  BianchiTag::VI,    BianchiTag::IX,
    BianchiTag::VIII, BianchiTag::V, BianchiTag::IV, BianchiTag::VIIa, BianchiTag::IIIa1,
    BianchiTag::VIa,
};

bool takes_parameter(BianchiTag tag) { return tag == BianchiTag::VIIa || tag == BianchiTag::VIa; }

template <class C>
StructureTensor<C> from_row(const std::array<C, 9>& row) {
  StructureTensor<C> mu;
  for (std::size_t n = 0; n < 9; ++n) {
    const auto& idx = kIndependentEntries[n];
    mu.set_antisymmetric(idx[0], idx[1], idx[2], row[n]);
  }
  return mu;
}

}  // namespace

std::span<const BianchiTag> all_bianchi_tags() { return kTags; }

std::string tag_name(BianchiTag tag) {
  switch (tag) {
    case BianchiTag::I: return "I";
    case BianchiTag::II: return "II";
    case BianchiTag::VII: return "VII";
    case BianchiTag::VI: return "VI";
    case BianchiTag::IX: return "IX";
    case BianchiTag::VIII: return "VIII";
    case BianchiTag::V: return "V";
    case BianchiTag::IV: return "IV";
    case BianchiTag::VIIa: return "VII_a";
    case BianchiTag::IIIa1: return "III_a=1";
    case BianchiTag::VIa: return "VI_a";
  }
  throw std::logic_error("unknown Bianchi tag");
}

BianchiTag parse_bianchi_tag(std::string_view name) {
  for (BianchiTag tag : kTags) {
    if (name == tag_name(tag)) return tag;
  }
  if (name == "VIIa") return BianchiTag::VIIa;
  if (name == "VIa") return BianchiTag::VIa;
  if (name == "III" || name == "IIIa1" || name == "III_a1") return BianchiTag::IIIa1;
  throw std::invalid_argument("unknown Bianchi type '" + std::string(name) + "'");
}

BianchiType BianchiType::make(BianchiTag tag, std::optional<Rational> a) {
  if (takes_parameter(tag)) {
    if (!a) throw std::invalid_argument(tag_name(tag) + " requires the parameter a");
    if (sgn(*a) <= 0) throw std::invalid_argument("parameter a must be positive");
    if (tag == BianchiTag::VIa && *a == 1) {
      throw std::invalid_argument("VI_a requires a != 1 (a = 1 is III_a=1)");
    }
    return BianchiType(tag, std::move(a));
  }
  if (tag == BianchiTag::IIIa1) {
    if (a && *a != 1) throw std::invalid_argument("III_a=1 fixes a = 1");
    return BianchiType(tag, Rational(1));
  }
  if (a) throw std::invalid_argument(tag_name(tag) + " takes no parameter a");
  return BianchiType(tag, std::nullopt);
}

bool BianchiType::has_parameter() const { return takes_parameter(tag_); }

const Rational& BianchiType::a() const {
  if (!a_) throw std::logic_error(tag_name(tag_) + " has no parameter a");
  return *a_;
}

std::string BianchiType::name() const {
  if (has_parameter()) return tag_name(tag_) + "(a=" + to_string(*a_) + ")";
  return tag_name(tag_);
}

std::vector<BianchiType> bianchi_registry(const Rational& a) {
  std::vector<BianchiType> out;
  for (BianchiTag tag : kTags) {
    out.push_back(BianchiType::make(tag, takes_parameter(tag) ? std::optional<Rational>(a)
                                                              : std::nullopt));
  }
  return out;
}

std::array<Rational, 4> structure_parameters(const BianchiType& t) {
  switch (t.tag()) {
    case BianchiTag::I: return {0, 0, 0, 0};
    case BianchiTag::II: return {0, 1, 0, 0};
    case BianchiTag::VII: return {0, 1, 1, 0};
    case BianchiTag::VI: return {0, 1, -1, 0};
    case BianchiTag::IX: return {0, 1, 1, 1};
    case BianchiTag::VIII: return {0, 1, 1, -1};
    case BianchiTag::V: return {1, 0, 0, 0};
    case BianchiTag::IV: return {1, 0, 0, 1};
    case BianchiTag::VIIa: return {t.a(), 0, 1, 1};
    case BianchiTag::IIIa1: return {1, 0, 1, -1};
    case BianchiTag::VIa: return {t.a(), 0, 1, -1};
  }
  throw std::logic_error("unknown Bianchi tag");
}

StructureTensor<Rational> structure_constants(const BianchiType& t) {
  using R = Rational;
  // Columns: mu1_12 mu2_12 mu3_12 | mu1_23 mu2_23 mu3_23 | mu1_31 mu2_31 mu3_31
  std::array<R, 9> row{};
  switch (t.tag()) {
    case BianchiTag::I: row = {0, 0, 0, 0, 0, 0, 0, 0, 0}; break;
    case BianchiTag::II: row = {0, 0, 0, 1, 0, 0, 0, 0, 0}; break;
    case BianchiTag::VII: row = {0, 0, 0, 1, 0, 0, 0, 1, 0}; break;
    case BianchiTag::VI: row = {0, 0, 0, 1, 0, 0, 0, -1, 0}; break;
    case BianchiTag::IX: row = {0, 0, 1, 1, 0, 0, 0, 1, 0}; break;
    case BianchiTag::VIII: row = {0, 0, -1, 1, 0, 0, 0, 1, 0}; break;
    case BianchiTag::V: row = {0, -1, 0, 0, 0, 0, 0, 0, 1}; break;
    case BianchiTag::IV: row = {0, -1, 1, 0, 0, 0, 0, 0, 1}; break;
    case BianchiTag::VIIa: row = {0, R(-t.a()), 1, 0, 0, 0, 0, 1, t.a()}; break;
    case BianchiTag::IIIa1: row = {0, -1, -1, 0, 0, 0, 0, 1, 1}; break;
    case BianchiTag::VIa: row = {0, R(-t.a()), -1, 0, 0, 0, 0, 1, t.a()}; break;
  }
  return from_row(row);
}

PolyStructureTensor lift(const StructureTensor<Rational>& mu) {
  return mu.map([](const Rational& r) { return CPoly(r); });
}

ExactStructureTensor lift_exact(const StructureTensor<Rational>& mu) {
  return mu.map([](const Rational& r) { return ExtScalar(r); });
}

PolyStructureTensor deform(const BianchiType& t, const Rational& omega, const Rational& p0) {
  const LaxFamilyParams params = solve_C(lift_exact(structure_constants(t)), p0);
  return build_mu(params, omega).mu;
}

PolyStructureTensor transcribed_deformation(const BianchiType& t, const Rational& omega,
                                            const Rational& p0) {
  if (sgn(p0) <= 0) throw std::invalid_argument("p0 must be positive");
  const Rational radicand = 2 * p0;
  const CPoly q = CPoly::variable(Var::q);
  const CPoly p = CPoly::variable(Var::p);
  const CPoly Ap = CPoly::variable(Var::a_plus);
  const CPoly Am = CPoly::variable(Var::a_minus);
  const CPoly w(omega);
  const CPoly P0(p0);
  // 1/sqrt(2 p0), 1/(2 p0), 1/(-2 p0), 1/p0
  const CPoly inv_s(ExtScalar::sqrt_of(radicand).inverse());
  const CPoly inv_2p0(Rational(1) / (2 * p0));
  const CPoly inv_m2p0(Rational(-1) / (2 * p0));
  const CPoly inv_p0(Rational(1) / p0);
  const CPoly a = t.has_parameter() ? CPoly(t.a()) : CPoly(1);

  // Columns: mu1_12 mu2_12 mu3_12 | mu1_23 mu2_23 mu3_23 | mu1_31 mu2_31 mu3_31
  std::array<CPoly, 9> row{};
  switch (t.tag()) {
    case BianchiTag::I:
      break;
    case BianchiTag::II:
      row = {0, 0, 0, (p + P0) * inv_2p0, w * q * inv_2p0, 0,
             w * q * inv_2p0, (p - P0) * inv_m2p0, 0};
      break;
    case BianchiTag::VII:
      row = {0, 0, 0, 1, 0, 0, 0, 1, 0};
      break;
    case BianchiTag::VI:
      row = {0, 0, 0, p * inv_p0, w * q * inv_p0, 0, w * q * inv_p0, -(p * inv_p0), 0};
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
             (p - P0) * inv_m2p0, w * q * inv_m2p0, -a * Am * inv_s,
             w * q * inv_m2p0,    (p + P0) * inv_2p0, a * Ap * inv_s};
      break;
    case BianchiTag::IIIa1:
      row = {Am * inv_s,          -Ap * inv_s,      -1,
             (p - P0) * inv_m2p0, w * q * inv_m2p0, -Am * inv_s,
             w * q * inv_m2p0,    (p + P0) * inv_2p0, Ap * inv_s};
      break;
    case BianchiTag::VIa:
      row = {a * Am * inv_s,      -a * Ap * inv_s,  -1,
             (p - P0) * inv_m2p0, w * q * inv_m2p0, -a * Am * inv_s,
             w * q * inv_m2p0,    (p + P0) * inv_2p0, a * Ap * inv_s};
      break;
  }
  return from_row(row);
}

CPoly reduce_on_shell(const CPoly& f, const Rational& omega, const Rational& p0) {
  if (sgn(omega) <= 0) throw std::invalid_argument("omega must be positive");
  if (sgn(p0) <= 0) throw std::invalid_argument("p0 must be positive");
  const CPoly Ap = CPoly::variable(Var::a_plus);
  const CPoly Am = CPoly::variable(Var::a_minus);
  const CPoly half(Rational(1, 2));
  const CPoly eliminated = substitute(
      f, {CPoly(Rational(1) / omega) * Ap * Am, half * (Ap * Ap - Am * Am), Ap, Am});

  const CPoly am_squared = CPoly(Rational(2 * p0)) - Ap * Ap;
  CPoly reduced;
  for (const auto& [e, c] : eliminated.terms()) {
    Exponents base = e;
    const unsigned pairs = e[3] / 2;
    base[3] = static_cast<std::uint8_t>(e[3] % 2);
    reduced += CPoly::monomial(c, base) * pow(am_squared, pairs);
  }
  return reduced;
}

std::array<CPoly, 3> classical_jacobian(const PolyStructureTensor& mu, const Rational& omega,
                                        const Rational& p0) {
  auto raw = jacobi_defect(mu);
  for (auto& j : raw) j = reduce_on_shell(j, omega, p0);
  return raw;
}

ExactStructureTensor at_initial_point(const PolyStructureTensor& mu, const Rational& p0) {
  const auto point = initial_point(p0);
  return mu.map([&](const CPoly& f) { return evaluate(f, point); });
}

bool is_rigid(const BianchiType& t, const Rational& omega, const Rational& p0) {
  const PolyStructureTensor mu = deform(t, omega, p0);
  for (const CPoly& f : mu.operation().coefficients()) {
    if (!f.is_constant()) return false;
  }
  return mu == lift(structure_constants(t));
}

}  // namespace opbianchi
