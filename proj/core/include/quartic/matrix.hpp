#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "quartic/rational.hpp"

namespace quartic {

/// Dense row-major matrix over Q.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);
  Matrix(std::initializer_list<std::initializer_list<long>> rows);

  static Matrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Matrix operator*(const Matrix& rhs) const;
  std::vector<Rational> operator*(const std::vector<Rational>& v) const;
  bool operator==(const Matrix& rhs) const;

  Matrix transposed() const;
  bool is_identity() const;
  bool is_symmetric() const;

  /// Principal submatrix on the given index set.
  Matrix principal(const std::vector<std::size_t>& idx) const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(Matrix& m);

std::size_t rank(Matrix m);

/// Basis of the right null space.
std::vector<std::vector<Rational>> kernel(const Matrix& m);

/// Some solution x of m x = b, or nullopt when inconsistent.
std::optional<std::vector<Rational>> solve(const Matrix& m, const std::vector<Rational>& b);

Rational determinant(Matrix m);

}  // namespace quartic
