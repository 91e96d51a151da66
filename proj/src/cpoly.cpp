#include "opbianchi/cpoly.hpp"

#include <cmath>
#include <numeric>

namespace opbianchi {

namespace {

int degree_of(const Exponents& e) { return std::accumulate(e.begin(), e.end(), 0); }

}  // namespace

bool MonomialOrder::operator()(const Exponents& a, const Exponents& b) const {
  const int da = degree_of(a);
  const int db = degree_of(b);
  if (da != db) return da > db;
  return a > b;
}

CPoly::CPoly(ExtScalar c) {
  if (!c.is_zero()) terms_.emplace(Exponents{}, std::move(c));
}

CPoly CPoly::variable(Var v) {
  Exponents e{};
  e[static_cast<std::size_t>(v)] = 1;
  return monomial(ExtScalar(1), e);
}

CPoly CPoly::monomial(ExtScalar coeff, const Exponents& exps) {
  CPoly r;
  r.add_term(exps, coeff);
  return r;
}

bool CPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Exponents{});
}

ExtScalar CPoly::constant_term() const {
  auto it = terms_.find(Exponents{});
  return it == terms_.end() ? ExtScalar{} : it->second;
}

int CPoly::total_degree() const {
  if (terms_.empty()) return -1;
  return degree_of(terms_.begin()->first);
}

int CPoly::degree_in(Var v) const {
  int d = terms_.empty() ? -1 : 0;
  for (const auto& [e, c] : terms_) d = std::max<int>(d, e[static_cast<std::size_t>(v)]);
  return d;
}

void CPoly::add_term(const Exponents& e, const ExtScalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

CPoly CPoly::derivative(Var v) const {
  const auto idx = static_cast<std::size_t>(v);
  CPoly r;
  for (const auto& [e, c] : terms_) {
    if (e[idx] == 0) continue;
    Exponents de = e;
    --de[idx];
    r.add_term(de, c * ExtScalar(static_cast<int>(e[idx])));
  }
  return r;
}

CPoly CPoly::operator-() const {
  CPoly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

CPoly& CPoly::operator+=(const CPoly& rhs) {
  for (const auto& [e, c] : rhs.terms_) add_term(e, c);
  return *this;
}

CPoly& CPoly::operator-=(const CPoly& rhs) {
  for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
  return *this;
}

CPoly operator*(const CPoly& a, const CPoly& b) {
  CPoly r;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      Exponents e;
      for (std::size_t i = 0; i < kVarCount; ++i) e[i] = static_cast<std::uint8_t>(ea[i] + eb[i]);
      r.add_term(e, ca * cb);
    }
  }
  return r;
}

CPoly& CPoly::operator*=(const CPoly& rhs) { return *this = *this * rhs; }

CPoly pow(const CPoly& base, unsigned exp) {
  CPoly r(1);
  for (unsigned i = 0; i < exp; ++i) r *= base;
  return r;
}

CPoly substitute(const CPoly& f, const std::array<CPoly, kVarCount>& replacement) {
  CPoly r;
  for (const auto& [e, c] : f.terms()) {
    CPoly term(c);
    for (std::size_t i = 0; i < kVarCount; ++i) {
      if (e[i] != 0) term *= pow(replacement[i], e[i]);
    }
    r += term;
  }
  return r;
}

ExtScalar evaluate(const CPoly& f, const std::array<ExtScalar, kVarCount>& point) {
  ExtScalar r;
  for (const auto& [e, c] : f.terms()) {
    ExtScalar term = c;
    for (std::size_t i = 0; i < kVarCount; ++i) {
      for (int k = 0; k < e[i]; ++k) term *= point[i];
    }
    r += term;
  }
  return r;
}

double evaluate(const CPoly& f, const std::array<double, kVarCount>& point) {
  double r = 0.0;
  for (const auto& [e, c] : f.terms()) {
    double term = c.to_double();
    for (std::size_t i = 0; i < kVarCount; ++i) term *= std::pow(point[i], e[i]);
    r += term;
  }
  return r;
}

}  // namespace opbianchi
