#pragma once

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <vector>

#include "crnreal/rational.hpp"

namespace crnreal {

/// Dense row-major matrix of exact rationals. The shape is fixed at
/// construction.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);
  /// Row-wise literal, e.g. Matrix{{1, -1}, {0, 0}}. All rows must have the
  /// same length.
  Matrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static Matrix identity(std::size_t n);
  /// Builds a matrix whose columns are the given vectors, each of length
  /// `rows` (needed when `columns` is empty).
  static Matrix from_columns(const std::vector<RatVector>& columns,
                             std::size_t rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) {
    return data_[r * cols_ + c];
  }
  const Rational& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  RatVector row(std::size_t r) const;
  RatVector column(std::size_t c) const;
  Matrix select_columns(std::span<const std::size_t> indices) const;
  Matrix select_rows(std::span<const std::size_t> indices) const;
  Matrix transpose() const;
  /// [this | other]
  Matrix hcat(const Matrix& other) const;

  bool is_zero() const;

  friend bool operator==(const Matrix& a, const Matrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

using RatMatrix = Matrix;

Matrix operator*(const Matrix& a, const Matrix& b);
RatVector operator*(const Matrix& a, const RatVector& x);

std::ostream& operator<<(std::ostream& os, const Matrix& m);

struct RrefResult {
  Matrix reduced;
  std::vector<std::size_t> pivots;
};

/// Reduced row echelon form by Gauss-Jordan elimination, first nonzero entry
/// of each column taken as pivot.
RrefResult rref(const Matrix& m);

std::size_t rank(const Matrix& m);

/// Basis of {x : m x = 0}. One vector per free column of rref(m): the free
/// variable set to one, the other free variables zero, then scaled to a
/// primitive integer vector.
std::vector<RatVector> kernel_basis(const Matrix& m);

std::size_t nullity(const Matrix& m);

/// col(a) == col(b), decided by rank(a) == rank(b) == rank([a|b]).
bool column_space_equal(const Matrix& a, const Matrix& b);

}  // namespace crnreal
