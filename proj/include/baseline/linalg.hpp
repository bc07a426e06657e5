#pragma once

#include <cstddef>
#include <utility>
#include <vector>

namespace baseline {

// Dense row-major matrix. Problems here are tiny (hundreds of rows, tens of
// columns), so plain contiguous storage is all we need.
struct Matrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<double> data;

  Matrix() = default;
  Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0.0) {}

  double& at(std::size_t i, std::size_t j) { return data[i * cols + j]; }
  double at(std::size_t i, std::size_t j) const { return data[i * cols + j]; }
  const double* row(std::size_t i) const { return data.data() + i * cols; }
  double* row(std::size_t i) { return data.data() + i * cols; }
};

enum class ColumnKind { Numeric, Binary };

// Describes which design columns are numeric (standardized by scale-aware
// models) and which one-hot blocks exist (so linear models can drop a level).
struct ColumnLayout {
  std::vector<ColumnKind> kinds;
  std::vector<std::pair<int, int>> one_hot_blocks;  // (first column, level count)

  static ColumnLayout all_numeric(std::size_t n) {
    ColumnLayout layout;
    layout.kinds.assign(n, ColumnKind::Numeric);
    return layout;
  }
};

struct LeastSquaresResult {
  std::vector<double> coef;
  std::size_t rank = 0;
  bool rank_deficient = false;
};

// Minimum-norm least-squares solution of A x ~ b via column-pivoted
// Householder QR; rank-deficient systems are completed with a small
// regularized elimination of the free block, which yields the least-norm
// solution exactly.
LeastSquaresResult solve_least_squares(const Matrix& A, const std::vector<double>& b);

}  // namespace baseline
