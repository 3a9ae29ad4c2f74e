#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "leibniz/scalar.hpp"

namespace leibniz {

/// Dense exact matrix, 0-based, row-major. Only what the window computations
/// need: row reduction, rank, kernel and solving.
class Matrix {
 public:
  Matrix(const Field& field, std::size_t rows, std::size_t cols);

  const Field& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  bool operator==(const Matrix&) const = default;

 private:
  Field field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Scalar> data_;
};

struct RowEchelon {
  Matrix reduced;
  std::vector<std::size_t> pivot_cols;
};

/// Reduced row echelon form by Gauss-Jordan elimination.
RowEchelon row_reduce(Matrix m);

std::size_t rank(const Matrix& m);

/// Basis of {x : m x = 0}, one vector per free column.
std::vector<std::vector<Scalar>> kernel(const Matrix& m);

/// Some x with m x = b, or nullopt if the system is inconsistent.
std::optional<std::vector<Scalar>> solve(const Matrix& m, const std::vector<Scalar>& b);

}  // namespace leibniz
