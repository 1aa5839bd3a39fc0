#pragma once

#include "acs/gaussian.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace acs {

using Vector = std::vector<Gaussian>;

/// Dense row-major matrix over Q(i).
class Matrix {
public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Gaussian& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Gaussian& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vector apply(const Vector& x) const;
  Matrix conj_transpose() const;
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b) = default;

  static Matrix identity(std::size_t n);

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Gaussian> data_;
};

/// Reduced row echelon form together with its pivot columns.
struct Echelon {
  Matrix reduced;
  std::vector<std::size_t> pivots;
};

Echelon rref(Matrix m);
std::size_t rank(const Matrix& m);

/// Basis of {x : m x = 0}, one vector per free column (free entry set to 1,
/// other free entries 0), in increasing free-column order.
std::vector<Vector> kernel_basis(const Matrix& m);

/// Solves m x = b. Free variables are set to zero, so the result is the
/// lexicographically first pivot solution. Empty when inconsistent.
std::optional<Vector> solve(const Matrix& m, const Vector& b);

std::optional<Matrix> inverse(const Matrix& m);

}  // namespace acs
