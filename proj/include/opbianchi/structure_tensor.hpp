#pragma once

#include <array>
#include <string>

#include "opbianchi/graded_operad.hpp"

namespace opbianchi {

/// Bilinear bracket on a 3d space: mu(i, j, k) is the coefficient of e_i in
/// [e_j, e_k]. Indices are 0-based; tables and exports use 1-based labels.
template <Coefficient C>
class StructureTensor {
 public:
  StructureTensor() : op_(3, 2) {}
  explicit StructureTensor(BasicOperation<C> op) : op_(std::move(op)) {
    if (op_.dim() != 3 || op_.degree() != 2) {
      throw std::invalid_argument("structure tensor must be a bilinear operation on dimension 3");
    }
  }

  const C& operator()(std::size_t i, std::size_t j, std::size_t k) const { return op_({i, j, k}); }

  void set(std::size_t i, std::size_t j, std::size_t k, C value) { op_({i, j, k}) = std::move(value); }

  /// mu(i, j, k) = value and mu(i, k, j) = -value.
  void set_antisymmetric(std::size_t i, std::size_t j, std::size_t k, const C& value) {
    if (j == k) throw std::invalid_argument("antisymmetric entry needs distinct lower indices");
    op_({i, j, k}) = value;
    op_({i, k, j}) = -value;
  }

  bool is_antisymmetric() const {
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t j = 0; j < 3; ++j) {
        for (std::size_t k = j; k < 3; ++k) {
          if (!(op_({i, j, k}) == -op_({i, k, j}))) return false;
        }
      }
    }
    return true;
  }

  bool is_zero() const { return op_.is_zero(); }
  const BasicOperation<C>& operation() const { return op_; }

  template <class F>
  auto map(F&& f) const {
    using D = std::decay_t<decltype(f(std::declval<const C&>()))>;
    return StructureTensor<D>(op_.map(std::forward<F>(f)));
  }

  friend bool operator==(const StructureTensor& a, const StructureTensor& b) {
    return a.op_ == b.op_;
  }

 private:
  BasicOperation<C> op_;
};

/// Index triples (upper, lower, lower) of the nine independent entries, in
/// table column order 12, 23, 31.
inline constexpr std::size_t kIndependentEntries[9][3] = {
    {0, 0, 1}, {1, 0, 1}, {2, 0, 1}, {0, 1, 2}, {1, 1, 2},
    {2, 1, 2}, {0, 2, 0}, {1, 2, 0}, {2, 2, 0},
};

/// "mu1_23" style label for a 0-based index triple.
inline std::string entry_label(std::size_t i, std::size_t j, std::size_t k) {
  return "mu" + std::to_string(i + 1) + "_" + std::to_string(j + 1) + std::to_string(k + 1);
}

/// Jacobi defect [[e1,e2],e3] + [[e2,e3],e1] + [[e3,e1],e2] for commuting coefficients.
template <Coefficient C>
std::array<C, 3> jacobi_defect(const StructureTensor<C>& mu) {
  if (!mu.is_antisymmetric()) throw std::invalid_argument("structure tensor is not antisymmetric");
  std::array<C, 3> out{};
  constexpr std::size_t cyc[3][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}};
  for (std::size_t m = 0; m < 3; ++m) {
    C acc{};
    for (const auto& c : cyc) {
      for (std::size_t k = 0; k < 3; ++k) acc += mu(k, c[0], c[1]) * mu(m, k, c[2]);
    }
    out[m] = acc;
  }
  return out;
}

}  // namespace opbianchi
