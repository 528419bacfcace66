// Dense integer matrices over GMP integers.
#pragma once

#include <string>
#include <vector>

#include "lensball/hjcf.hpp"

namespace lensball {

struct IntMatrix {
  std::size_t rows = 0, cols = 0;
  std::vector<BigInt> a;

  IntMatrix() = default;
  IntMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, 0) {}
  static IntMatrix identity(std::size_t n);

  BigInt& operator()(std::size_t i, std::size_t j) { return a[i * cols + j]; }
  const BigInt& operator()(std::size_t i, std::size_t j) const { return a[i * cols + j]; }
  bool symmetric() const;
  /// Drops row and column k.
  IntMatrix minor(std::size_t k) const;
  /// Leading principal i x i block.
  IntMatrix leading(std::size_t i) const;
  std::string str() const;

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;
};

/// Exact determinant by fraction-free elimination.
BigInt bareiss_det(IntMatrix m);

/// Diagonal of the Smith normal form: nonnegative, each dividing the next,
/// zeros last. Length min(rows, cols).
std::vector<BigInt> smith_diagonal(IntMatrix m);

}  // namespace lensball
