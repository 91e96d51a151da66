#pragma once

// Endomorphism operad of a finite-dimensional carrier V = K^d.
//
// An operation of degree n is a multilinear map V^{(x)n} -> V stored as a
// dense coefficient tensor of d^(n+1) entries. Index order is
// (output, input_1, ..., input_n) with the output index slowest. Degree 0
// operations are fixed vectors; degree 1 operations are d x d matrices whose
// row index is the output.

#include <concepts>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "opbianchi/rational.hpp"

namespace opbianchi {

template <class C>
concept Coefficient = std::regular<C> && requires(C a, const C& b) {
  { a + b } -> std::convertible_to<C>;
  { a - b } -> std::convertible_to<C>;
  { a * b } -> std::convertible_to<C>;
  { -a } -> std::convertible_to<C>;
  a += b;
  a -= b;
};

/// (-1)^e for an integer exponent; negative exponents have the same parity rule.
class GradedSign {
 public:
  constexpr GradedSign() = default;
  static constexpr GradedSign from_exponent(long long e) {
    return GradedSign((e % 2 == 0) ? 1 : -1);
  }
  constexpr int value() const { return value_; }
  constexpr bool positive() const { return value_ > 0; }
  constexpr GradedSign operator*(GradedSign o) const { return GradedSign(value_ * o.value_); }
  constexpr bool operator==(const GradedSign&) const = default;

 private:
  constexpr explicit GradedSign(int v) : value_(v) {}
  int value_ = 1;
};

inline constexpr std::size_t kMaxOperationDim = 8;
inline constexpr std::size_t kMaxOperationEntries = std::size_t{1} << 20;

template <Coefficient C>
class BasicOperation {
 public:
  BasicOperation(std::size_t dim, int degree) : dim_(dim), degree_(degree) {
    coeffs_.assign(checked_size(dim, degree), C{});
  }

  BasicOperation(std::size_t dim, int degree, std::vector<C> coeffs)
      : dim_(dim), degree_(degree), coeffs_(std::move(coeffs)) {
    if (coeffs_.size() != checked_size(dim, degree)) {
      throw std::invalid_argument("operation needs exactly d^(n+1) = " +
                                  std::to_string(checked_size(dim, degree)) +
                                  " coefficients, got " + std::to_string(coeffs_.size()));
    }
  }

  static BasicOperation identity(std::size_t dim) {
    BasicOperation id(dim, 1);
    for (std::size_t i = 0; i < dim; ++i) id.coeffs_[i * dim + i] = C(1);
    return id;
  }

  std::size_t dim() const { return dim_; }
  int degree() const { return degree_; }
  /// |f| = n - 1, the degree used in every sign.
  int reduced_degree() const { return degree_ - 1; }

  std::span<const C> coefficients() const { return coeffs_; }
  const C& at(std::size_t flat) const { return coeffs_.at(flat); }
  C& at(std::size_t flat) { return coeffs_.at(flat); }

  /// index = (output, input_1, ..., input_n).
  std::size_t flat_index(std::span<const std::size_t> index) const {
    if (index.size() != static_cast<std::size_t>(degree_) + 1) {
      throw std::invalid_argument("index arity does not match operation degree");
    }
    std::size_t flat = 0;
    for (std::size_t v : index) {
      if (v >= dim_) throw std::out_of_range("index component exceeds carrier dimension");
      flat = flat * dim_ + v;
    }
    return flat;
  }
  const C& operator()(std::initializer_list<std::size_t> index) const {
    return coeffs_[flat_index(std::span(index.begin(), index.size()))];
  }
  C& operator()(std::initializer_list<std::size_t> index) {
    return coeffs_[flat_index(std::span(index.begin(), index.size()))];
  }

  bool is_zero() const {
    for (const C& c : coeffs_) {
      if (!(c == C{})) return false;
    }
    return true;
  }

  template <class F>
  auto map(F&& f) const -> BasicOperation<std::decay_t<decltype(f(std::declval<const C&>()))>> {
    using D = std::decay_t<decltype(f(std::declval<const C&>()))>;
    std::vector<D> out;
    out.reserve(coeffs_.size());
    for (const C& c : coeffs_) out.push_back(f(c));
    return BasicOperation<D>(dim_, degree_, std::move(out));
  }

  BasicOperation& operator+=(const BasicOperation& rhs) {
    require_same_shape(rhs);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    return *this;
  }
  BasicOperation& operator-=(const BasicOperation& rhs) {
    require_same_shape(rhs);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    return *this;
  }
  BasicOperation operator-() const {
    BasicOperation r = *this;
    for (C& c : r.coeffs_) c = -c;
    return r;
  }
  BasicOperation scaled(const C& factor) const {
    BasicOperation r = *this;
    for (C& c : r.coeffs_) c = factor * c;
    return r;
  }
  BasicOperation signed_by(GradedSign s) const { return s.positive() ? *this : -*this; }

  friend BasicOperation operator+(BasicOperation a, const BasicOperation& b) { return a += b; }
  friend BasicOperation operator-(BasicOperation a, const BasicOperation& b) { return a -= b; }
  friend bool operator==(const BasicOperation& a, const BasicOperation& b) {
    return a.dim_ == b.dim_ && a.degree_ == b.degree_ && a.coeffs_ == b.coeffs_;
  }

 private:
  static std::size_t checked_size(std::size_t dim, int degree) {
    if (dim < 1 || dim > kMaxOperationDim) {
      throw std::invalid_argument("carrier dimension must lie in [1, " +
                                  std::to_string(kMaxOperationDim) + "]");
    }
    if (degree < 0) throw std::invalid_argument("operation degree must be >= 0");
    std::size_t size = dim;
    for (int i = 0; i < degree; ++i) {
      size *= dim;
      if (size > kMaxOperationEntries) {
        throw std::invalid_argument("operation of degree " + std::to_string(degree) +
                                    " on dimension " + std::to_string(dim) +
                                    " exceeds the tensor size limit");
      }
    }
    return size;
  }

  void require_same_shape(const BasicOperation& rhs) const {
    if (dim_ != rhs.dim_ || degree_ != rhs.degree_) {
      throw std::invalid_argument("operations differ in dimension or degree");
    }
  }

  std::size_t dim_;
  int degree_;
  std::vector<C> coeffs_;
};

using Operation = BasicOperation<Rational>;

namespace detail {

inline std::size_t ipow(std::size_t base, int exp) {
  std::size_t r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

template <Coefficient C>
void require_same_dim(const BasicOperation<C>& f, const BasicOperation<C>& g) {
  if (f.dim() != g.dim()) {
    throw std::invalid_argument("dimension mismatch: " + std::to_string(f.dim()) + " vs " +
                                std::to_string(g.dim()));
  }
}

}  // namespace detail

/// f o_i g = (-1)^{i|g|} f o (1^{(x)i} (x) g (x) 1^{(x)(|f|-i)}), for 0 <= i <= |f|.
template <Coefficient C>
BasicOperation<C> partial_compose(const BasicOperation<C>& f, int slot,
                                  const BasicOperation<C>& g) {
  detail::require_same_dim(f, g);
  if (slot < 0 || slot > f.reduced_degree()) {
    throw std::out_of_range("slot index " + std::to_string(slot) + " outside [0, " +
                            std::to_string(f.reduced_degree()) + "]");
  }
  const std::size_t d = f.dim();
  const int n = f.degree();
  const int m = g.degree();
  const int r = n + m - 1;
  BasicOperation<C> h(d, r);

  // Inputs of h split as: prefix (slot digits), middle (m digits fed to g), suffix.
  const std::size_t suffix_len = static_cast<std::size_t>(n - 1 - slot);
  const std::size_t suffix_block = detail::ipow(d, static_cast<int>(suffix_len));
  const std::size_t middle_block = detail::ipow(d, m);

  const auto flat_size = h.coefficients().size();
  for (std::size_t flat = 0; flat < flat_size; ++flat) {
    const std::size_t suffix = flat % suffix_block;
    const std::size_t middle = (flat / suffix_block) % middle_block;
    const std::size_t head = flat / (suffix_block * middle_block);  // (out, prefix)
    C acc{};
    for (std::size_t k = 0; k < d; ++k) {
      const std::size_t f_flat = (head * d + k) * suffix_block + suffix;
      const std::size_t g_flat = k * middle_block + middle;
      const C& fc = f.at(f_flat);
      if (fc == C{}) continue;
      const C& gc = g.at(g_flat);
      if (gc == C{}) continue;
      acc += fc * gc;
    }
    h.at(flat) = std::move(acc);
  }
  return h.signed_by(GradedSign::from_exponent(static_cast<long long>(slot) * g.reduced_degree()));
}

/// f . g = sum_{i=0}^{|f|} f o_i g. Empty sum (deg f = 0) is the zero operation.
template <Coefficient C>
BasicOperation<C> total_compose(const BasicOperation<C>& f, const BasicOperation<C>& g) {
  detail::require_same_dim(f, g);
  const int result_degree = f.degree() + g.reduced_degree();
  if (result_degree < 0) {
    throw std::invalid_argument("composition of two degree-0 operations is undefined");
  }
  BasicOperation<C> sum(f.dim(), result_degree);
  for (int i = 0; i <= f.reduced_degree(); ++i) sum += partial_compose(f, i, g);
  return sum;
}

/// [f, g] = f . g - (-1)^{|f||g|} g . f.
template <Coefficient C>
BasicOperation<C> gerstenhaber_bracket(const BasicOperation<C>& f, const BasicOperation<C>& g) {
  detail::require_same_dim(f, g);
  if (f.degree() == 0 && g.degree() == 0) {
    throw std::invalid_argument("bracket of two degree-0 operations is not defined");
  }
  const auto sign = GradedSign::from_exponent(static_cast<long long>(f.reduced_degree()) *
                                              g.reduced_degree());
  return total_compose(f, g) - total_compose(g, f).signed_by(sign);
}

/// Contracts the coefficient tensor against deg f argument vectors.
template <Coefficient C>
std::vector<C> apply(const BasicOperation<C>& f, std::span<const std::vector<C>> args) {
  if (args.size() != static_cast<std::size_t>(f.degree())) {
    throw std::invalid_argument("expected " + std::to_string(f.degree()) + " arguments, got " +
                                std::to_string(args.size()));
  }
  const std::size_t d = f.dim();
  for (const auto& a : args) {
    if (a.size() != d) throw std::invalid_argument("argument vector has wrong dimension");
  }
  std::vector<C> out(d, C{});
  const std::size_t inputs = f.coefficients().size() / d;
  std::vector<std::size_t> digits(args.size());
  for (std::size_t flat = 0; flat < f.coefficients().size(); ++flat) {
    const C& c = f.at(flat);
    if (c == C{}) continue;
    std::size_t rest = flat % inputs;
    for (std::size_t pos = args.size(); pos-- > 0;) {
      digits[pos] = rest % d;
      rest /= d;
    }
    C term = c;
    for (std::size_t pos = 0; pos < args.size(); ++pos) term = term * args[pos][digits[pos]];
    out[flat / inputs] += term;
  }
  return out;
}

template <Coefficient C>
std::vector<C> apply(const BasicOperation<C>& f, std::initializer_list<std::vector<C>> args) {
  return apply(f, std::span<const std::vector<C>>(args.begin(), args.size()));
}

}  // namespace opbianchi
