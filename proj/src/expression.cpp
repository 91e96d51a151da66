#include "opbianchi/expression.hpp"

#include <cctype>
#include <stdexcept>
#include <vector>

namespace opbianchi {

namespace {

constexpr const char* kVarNames[kVarCount] = {"q", "p", "Ap", "Am"};
constexpr const char* kGeneratorNames[kVarCount] = {"Q", "P", "Ap", "Am"};

std::string format_abs(const Rational& magnitude) {
  return magnitude.get_den() == 1 ? magnitude.get_str() : "(" + magnitude.get_str() + ")";
}

// Appends "coef*monomial" with a sign separator; monomial may be empty.
void append_term(std::string& out, const Rational& coeff, bool with_s, const std::string& mono) {
  const bool negative = sgn(coeff) < 0;
  const Rational magnitude = abs(coeff);
  if (out.empty()) {
    if (negative) out += "-";
  } else {
    out += negative ? " - " : " + ";
  }
  std::vector<std::string> factors;
  if (magnitude != 1 || (!with_s && mono.empty())) factors.push_back(format_abs(magnitude));
  if (with_s) factors.push_back("s");
  if (!mono.empty()) factors.push_back(mono);
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (i) out += "*";
    out += factors[i];
  }
}

void append_coefficient(std::string& out, const ExtScalar& c, const std::string& mono) {
  if (sgn(c.rational_part()) != 0) append_term(out, c.rational_part(), false, mono);
  if (sgn(c.sqrt_part()) != 0) append_term(out, c.sqrt_part(), true, mono);
}

class Parser {
 public:
  Parser(std::string_view text, const Rational& radicand, const char* const* names)
      : text_(text), radicand_(radicand), names_(names) {}

  NCPoly parse() {
    skip_space();
    NCPoly result = NCPoly(0).with_radicand(radicand_);
    if (text_.substr(pos_) == "0") return result;
    bool negative = false;
    if (peek() == '-') {
      negative = true;
      ++pos_;
    }
    while (true) {
      NCPoly term = parse_term();
      result += negative ? -term : term;
      skip_space();
      if (pos_ >= text_.size()) break;
      const char op = text_[pos_];
      if (op != '+' && op != '-') fail("expected '+' or '-'");
      negative = op == '-';
      ++pos_;
      skip_space();
    }
    return result;
  }

 private:
  NCPoly parse_term() {
    NCPoly term = parse_factor();
    while (peek() == '*') {
      ++pos_;
      term = term * parse_factor();
    }
    return term;
  }

  NCPoly parse_factor() {
    const char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) return NCPoly(ExtScalar(Rational(read_int())));
    if (c == '(') {
      ++pos_;
      mpz_class num = read_int();
      expect('/');
      mpz_class den = read_int();
      expect(')');
      if (den == 0) fail("zero denominator");
      Rational r(num, den);
      r.canonicalize();
      return NCPoly(ExtScalar(r));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      const std::string_view name = text_.substr(start, pos_ - start);
      NCPoly base;
      if (name == "s") {
        if (sgn(radicand_) == 0) fail("'s' used without a sqrt context");
        base = NCPoly(ExtScalar::sqrt_of(radicand_));
      } else {
        base = symbol(name);
      }
      if (peek() == '^') {
        ++pos_;
        const mpz_class e = read_int();
        NCPoly power(1);
        for (unsigned long i = 0; i < e.get_ui(); ++i) power = power * base;
        return power;
      }
      return base;
    }
    fail("unexpected character");
  }

  NCPoly symbol(std::string_view name) {
    for (std::size_t i = 0; i < kVarCount; ++i) {
      if (name == names_[i]) return NCPoly::generator(static_cast<Generator>(i), radicand_);
    }
    fail("unknown symbol '" + std::string(name) + "'");
  }

  mpz_class read_int() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    return mpz_class(std::string(text_.substr(start, pos_ - start)), 10);
  }

  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  void skip_space() {
    while (pos_ < text_.size() && text_[pos_] == ' ') ++pos_;
  }
  [[noreturn]] void fail(const std::string& why) const {
    throw std::invalid_argument("cannot parse '" + std::string(text_) + "' at offset " +
                                std::to_string(pos_) + ": " + why);
  }

  std::string_view text_;
  Rational radicand_;
  const char* const* names_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string format_rational_factor(const Rational& r) {
  return sgn(r) < 0 ? "-" + format_abs(abs(r)) : format_abs(r);
}

std::string format_scalar(const ExtScalar& x) {
  std::string out;
  append_coefficient(out, x, "");
  return out.empty() ? "0" : out;
}

std::string format(const CPoly& f) {
  std::string out;
  for (const auto& [e, c] : f.terms()) {
    std::string mono;
    for (std::size_t i = 0; i < kVarCount; ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += kVarNames[i];
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    append_coefficient(out, c, mono);
  }
  return out.empty() ? "0" : out;
}

std::string format(const NCPoly& f) {
  std::string out;
  for (const auto& [w, c] : f.terms()) {
    std::string mono;
    for (Generator g : w) {
      if (!mono.empty()) mono += "*";
      mono += kGeneratorNames[static_cast<std::size_t>(g)];
    }
    append_coefficient(out, c, mono);
  }
  return out.empty() ? "0" : out;
}

NCPoly parse_ncpoly(std::string_view text, const Rational& radicand) {
  return Parser(text, radicand, kGeneratorNames).parse();
}

CPoly parse_cpoly(std::string_view text, const Rational& radicand) {
  return commutative_image(Parser(text, radicand, kVarNames).parse());
}

ExtScalar parse_scalar(std::string_view text, const Rational& radicand) {
  const NCPoly f = parse_ncpoly(text, radicand);
  if (!f.is_constant()) throw std::invalid_argument("not a scalar: '" + std::string(text) + "'");
  return f.coefficient(Word{});
}

}  // namespace opbianchi
