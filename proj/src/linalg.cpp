#include "hnil/linalg.hpp"

#include <cassert>
#include <stdexcept>

namespace hnil {

std::string format_rational(const Rational& r) {
  if (boost::multiprecision::denominator(r) == 1) {
    return boost::multiprecision::numerator(r).str();
  }
  return r.str();
}

std::string format_rational_pq(const Rational& r) {
  return boost::multiprecision::numerator(r).str() + "/" +
         boost::multiprecision::denominator(r).str();
}

bool is_zero(const Vector& v) {
  for (const auto& x : v) {
    if (x != 0) return false;
  }
  return true;
}

Matrix::Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

Matrix Matrix::from_rows(const std::vector<Vector>& rows, std::size_t cols) {
  Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw std::invalid_argument("Matrix::from_rows: ragged rows");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

Matrix Matrix::from_columns(const std::vector<Vector>& columns, std::size_t rows) {
  Matrix m(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != rows) throw std::invalid_argument("Matrix::from_columns: ragged columns");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
  }
  return m;
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Vector Matrix::row(std::size_t r) const {
  return Vector(entries_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                entries_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Vector Matrix::column(std::size_t c) const {
  Vector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

Vector Matrix::operator*(const Vector& x) const {
  if (x.size() != cols_) throw std::invalid_argument("Matrix * Vector: size mismatch");
  Vector y(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    Rational acc = 0;
    for (std::size_t c = 0; c < cols_; ++c) {
      if (x[c] != 0) acc += (*this)(r, c) * x[c];
    }
    y[r] = acc;
  }
  return y;
}

RowEchelon rref(Matrix m) {
  RowEchelon out;
  std::size_t pivot_row = 0;
  for (std::size_t c = 0; c < m.cols() && pivot_row < m.rows(); ++c) {
    std::size_t r = pivot_row;
    while (r < m.rows() && m(r, c) == 0) ++r;
    if (r == m.rows()) continue;
    if (r != pivot_row) {
      for (std::size_t k = 0; k < m.cols(); ++k) std::swap(m(r, k), m(pivot_row, k));
    }
    const Rational inv = 1 / m(pivot_row, c);
    for (std::size_t k = c; k < m.cols(); ++k) m(pivot_row, k) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == pivot_row || m(i, c) == 0) continue;
      const Rational factor = m(i, c);
      for (std::size_t k = c; k < m.cols(); ++k) {
        if (m(pivot_row, k) != 0) m(i, k) -= factor * m(pivot_row, k);
      }
    }
    out.pivot_columns.push_back(c);
    ++pivot_row;
  }
  out.reduced = std::move(m);
  return out;
}

std::vector<Vector> kernel_basis(const Matrix& m) {
  const RowEchelon e = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : e.pivot_columns) is_pivot[c] = true;

  std::vector<Vector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector x(m.cols());
    x[free] = 1;
    for (std::size_t i = 0; i < e.pivot_columns.size(); ++i) {
      x[e.pivot_columns[i]] = -e.reduced(i, free);
    }
    basis.push_back(std::move(x));
  }
  return basis;
}

std::optional<Vector> solve(const Matrix& m, const Vector& b) {
  if (b.size() != m.rows()) throw std::invalid_argument("solve: right-hand side has wrong length");
  Matrix aug(m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
    aug(r, m.cols()) = b[r];
  }
  const RowEchelon e = rref(std::move(aug));
  if (!e.pivot_columns.empty() && e.pivot_columns.back() == m.cols()) return std::nullopt;

  Vector x(m.cols());
  for (std::size_t i = 0; i < e.pivot_columns.size(); ++i) {
    x[e.pivot_columns[i]] = e.reduced(i, m.cols());
  }
  return x;
}

std::optional<Vector> in_span(const Vector& v, const std::vector<Vector>& basis) {
  return solve(Matrix::from_columns(basis, v.size()), v);
}

std::vector<Vector> row_space_basis(const std::vector<Vector>& vectors, std::size_t dim) {
  const RowEchelon e = rref(Matrix::from_rows(vectors, dim));
  std::vector<Vector> rows;
  rows.reserve(e.rank());
  for (std::size_t i = 0; i < e.rank(); ++i) rows.push_back(e.reduced.row(i));
  return rows;
}

Subquotient::Subquotient(const std::vector<Vector>& cycles, const std::vector<Vector>& boundaries,
                         std::size_t ambient_dim)
    : ambient_dim_(ambient_dim), boundary_basis_(row_space_basis(boundaries, ambient_dim)) {
  std::vector<Vector> current = boundary_basis_;
  for (auto& z : row_space_basis(cycles, ambient_dim)) {
    if (in_span(z, current)) continue;
    current.push_back(z);
    representatives_.push_back(std::move(z));
  }
  // B inside Z is a precondition; a boundary outside the cycle span would
  // make the quotient meaningless.
  assert(representatives_.size() + boundary_basis_.size() == row_space_basis(cycles, ambient_dim).size());

  std::vector<Vector> columns = representatives_;
  columns.insert(columns.end(), boundary_basis_.begin(), boundary_basis_.end());
  combined_ = Matrix::from_columns(columns, ambient_dim_);
}

std::optional<Vector> Subquotient::coordinates(const Vector& v) const {
  if (v.size() != ambient_dim_) throw std::invalid_argument("Subquotient::coordinates: wrong length");
  auto x = solve(combined_, v);
  if (!x) return std::nullopt;
  x->resize(representatives_.size());
  return x;
}

Vector Subquotient::lift(const Vector& coordinates) const {
  if (coordinates.size() != representatives_.size()) {
    throw std::invalid_argument("Subquotient::lift: wrong number of coordinates");
  }
  Vector v(ambient_dim_);
  for (std::size_t i = 0; i < coordinates.size(); ++i) {
    if (coordinates[i] == 0) continue;
    for (std::size_t k = 0; k < ambient_dim_; ++k) v[k] += coordinates[i] * representatives_[i][k];
  }
  return v;
}

}  // namespace hnil
