#include "crnreal/matrix.hpp"

#include <ostream>
#include <utility>

#include "crnreal/error.hpp"

namespace crnreal {

Matrix::Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

Matrix::Matrix(std::initializer_list<std::initializer_list<Rational>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) {
      throw Error(ErrorKind::DimensionMismatch, "ragged matrix literal");
    }
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    m(i, i) = 1;
  }
  return m;
}

Matrix Matrix::from_columns(const std::vector<RatVector>& columns,
                            std::size_t rows) {
  Matrix m(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != rows) {
      throw Error(ErrorKind::DimensionMismatch,
                  "from_columns: column length mismatch");
    }
    for (std::size_t r = 0; r < rows; ++r) {
      m(r, c) = columns[c][r];
    }
  }
  return m;
}

RatVector Matrix::row(std::size_t r) const {
  return RatVector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                   data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

RatVector Matrix::column(std::size_t c) const {
  RatVector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    out[r] = (*this)(r, c);
  }
  return out;
}

Matrix Matrix::select_columns(std::span<const std::size_t> indices) const {
  Matrix out(rows_, indices.size());
  for (std::size_t j = 0; j < indices.size(); ++j) {
    if (indices[j] >= cols_) {
      throw Error(ErrorKind::InvalidArgument, "column index out of range");
    }
    for (std::size_t r = 0; r < rows_; ++r) {
      out(r, j) = (*this)(r, indices[j]);
    }
  }
  return out;
}

Matrix Matrix::select_rows(std::span<const std::size_t> indices) const {
  Matrix out(indices.size(), cols_);
  for (std::size_t i = 0; i < indices.size(); ++i) {
    if (indices[i] >= rows_) {
      throw Error(ErrorKind::InvalidArgument, "row index out of range");
    }
    for (std::size_t c = 0; c < cols_; ++c) {
      out(i, c) = (*this)(indices[i], c);
    }
  }
  return out;
}

Matrix Matrix::transpose() const {
  Matrix out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      out(c, r) = (*this)(r, c);
    }
  }
  return out;
}

Matrix Matrix::hcat(const Matrix& other) const {
  if (other.rows_ != rows_) {
    throw Error(ErrorKind::DimensionMismatch, "hcat: row count mismatch");
  }
  Matrix out(rows_, cols_ + other.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      out(r, c) = (*this)(r, c);
    }
    for (std::size_t c = 0; c < other.cols_; ++c) {
      out(r, cols_ + c) = other(r, c);
    }
  }
  return out;
}

bool Matrix::is_zero() const {
  for (const auto& x : data_) {
    if (sgn(x) != 0) {
      return false;
    }
  }
  return true;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) {
    throw Error(ErrorKind::DimensionMismatch, "matrix product: shape mismatch");
  }
  Matrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (sgn(a(i, k)) == 0) {
        continue;
      }
      for (std::size_t j = 0; j < b.cols(); ++j) {
        out(i, j) += a(i, k) * b(k, j);
      }
    }
  }
  return out;
}

RatVector operator*(const Matrix& a, const RatVector& x) {
  if (a.cols() != x.size()) {
    throw Error(ErrorKind::DimensionMismatch,
                "matrix-vector product: shape mismatch");
  }
  RatVector out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      out[i] += a(i, k) * x[k];
    }
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Matrix& m) {
  os << "[";
  for (std::size_t r = 0; r < m.rows(); ++r) {
    os << (r == 0 ? "[" : ", [");
    for (std::size_t c = 0; c < m.cols(); ++c) {
      os << (c == 0 ? "" : ", ") << m(r, c).get_str();
    }
    os << "]";
  }
  return os << "]";
}

RrefResult rref(const Matrix& m) {
  Matrix a = m;
  std::vector<std::size_t> pivots;
  std::size_t lead_row = 0;
  for (std::size_t c = 0; c < a.cols() && lead_row < a.rows(); ++c) {
    std::size_t p = lead_row;
    while (p < a.rows() && sgn(a(p, c)) == 0) {
      ++p;
    }
    if (p == a.rows()) {
      continue;
    }
    if (p != lead_row) {
      for (std::size_t k = 0; k < a.cols(); ++k) {
        std::swap(a(p, k), a(lead_row, k));
      }
    }
    const Rational inv = 1 / a(lead_row, c);
    for (std::size_t k = c; k < a.cols(); ++k) {
      a(lead_row, k) *= inv;
    }
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == lead_row || sgn(a(r, c)) == 0) {
        continue;
      }
      const Rational f = a(r, c);
      for (std::size_t k = c; k < a.cols(); ++k) {
        a(r, k) -= f * a(lead_row, k);
      }
    }
    pivots.push_back(c);
    ++lead_row;
  }
  return {std::move(a), std::move(pivots)};
}

std::size_t rank(const Matrix& m) {
  return rref(m).pivots.size();
}

std::vector<RatVector> kernel_basis(const Matrix& m) {
  const auto [reduced, pivots] = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) {
    is_pivot[p] = true;
  }
  std::vector<RatVector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) {
      continue;
    }
    RatVector v(m.cols());
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) {
      v[pivots[i]] = -reduced(i, free);
    }
    basis.push_back(primitive_integer(v));
  }
  return basis;
}

std::size_t nullity(const Matrix& m) {
  return m.cols() - rank(m);
}

bool column_space_equal(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) {
    throw Error(ErrorKind::DimensionMismatch,
                "column_space_equal: row count mismatch");
  }
  const std::size_t ra = rank(a);
  return ra == rank(b) && ra == rank(a.hcat(b));
}

}  // namespace crnreal
