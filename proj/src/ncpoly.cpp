#include "opbianchi/ncpoly.hpp"

#include <algorithm>

namespace opbianchi {

bool WordOrder::operator()(const Word& a, const Word& b) const {
  if (a.size() != b.size()) return a.size() < b.size();
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

NCPoly::NCPoly(ExtScalar c) : radicand_(c.radicand()) {
  if (!c.is_zero()) terms_.emplace(Word{}, std::move(c));
}

NCPoly NCPoly::generator(Generator g, const Rational& radicand) {
  NCPoly r = word(Word{g});
  r.radicand_ = radicand;
  return r;
}

NCPoly NCPoly::word(Word w, ExtScalar coeff) {
  NCPoly r;
  r.radicand_ = coeff.radicand();
  r.add_term(w, coeff);
  return r;
}

NCPoly NCPoly::with_radicand(const Rational& radicand) const {
  NCPoly r = *this;
  r.radicand_ = merge_radicands(radicand_, radicand);
  return r;
}

bool NCPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

ExtScalar NCPoly::coefficient(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? ExtScalar{} : it->second;
}

void NCPoly::add_term(const Word& w, const ExtScalar& c) {
  if (c.is_zero()) return;
  radicand_ = merge_radicands(radicand_, c.radicand());
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

NCPoly NCPoly::operator-() const {
  NCPoly r = *this;
  for (auto& [w, c] : r.terms_) c = -c;
  return r;
}

NCPoly& NCPoly::operator+=(const NCPoly& rhs) {
  radicand_ = merge_radicands(radicand_, rhs.radicand_);
  for (const auto& [w, c] : rhs.terms_) add_term(w, c);
  return *this;
}

NCPoly& NCPoly::operator-=(const NCPoly& rhs) {
  radicand_ = merge_radicands(radicand_, rhs.radicand_);
  for (const auto& [w, c] : rhs.terms_) add_term(w, -c);
  return *this;
}

NCPoly operator*(const NCPoly& a, const NCPoly& b) {
  NCPoly r;
  r.radicand_ = merge_radicands(a.radicand_, b.radicand_);
  for (const auto& [wa, ca] : a.terms_) {
    for (const auto& [wb, cb] : b.terms_) {
      Word w = wa;
      w.insert(w.end(), wb.begin(), wb.end());
      r.add_term(w, ca * cb);
    }
  }
  return r;
}

NCPoly& NCPoly::operator*=(const NCPoly& rhs) { return *this = *this * rhs; }

NCPoly nc_add(const NCPoly& f, const NCPoly& g) { return f + g; }
NCPoly nc_mul(const NCPoly& f, const NCPoly& g) { return f * g; }
NCPoly commutator(const NCPoly& f, const NCPoly& g) { return f * g - g * f; }

CPoly commutative_image(const NCPoly& f) {
  CPoly r;
  for (const auto& [w, c] : f.terms()) {
    Exponents e{};
    for (Generator g : w) ++e[static_cast<std::size_t>(g)];
    r += CPoly::monomial(c, e);
  }
  return r;
}

}  // namespace opbianchi
