#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace hnil {

/// Exact rational number, always kept in reduced form with positive denominator.
using Rational = boost::multiprecision::mpq_rational;
using Vector = std::vector<Rational>;

/// "p" for integers, "p/q" otherwise.
std::string format_rational(const Rational& r);
/// Always "p/q", including integers ("3/1").
std::string format_rational_pq(const Rational& r);

bool is_zero(const Vector& v);

/// Dense row-major matrix over the rationals.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);

  /// `cols` is needed to shape an empty row list.
  static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols);
  static Matrix from_columns(const std::vector<Vector>& columns, std::size_t rows);
  static Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  Vector row(std::size_t r) const;
  Vector column(std::size_t c) const;

  Vector operator*(const Vector& x) const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> entries_;
};

struct RowEchelon {
  Matrix reduced;
  std::vector<std::size_t> pivot_columns;

  std::size_t rank() const { return pivot_columns.size(); }
};

/// Reduced row echelon form. Pivots are taken as the first nonzero entry
/// scanning columns left to right and rows top to bottom, so the result is
/// reproducible.
RowEchelon rref(Matrix m);

/// Basis of {x : m x = 0}: one vector per free column, that coordinate set to 1.
std::vector<Vector> kernel_basis(const Matrix& m);

/// Particular solution of m x = b with all free coordinates zero, or nullopt
/// when the system is inconsistent.
std::optional<Vector> solve(const Matrix& m, const Vector& b);

/// Coefficients c with sum c_i basis_i = v, or nullopt when v is outside the span.
std::optional<Vector> in_span(const Vector& v, const std::vector<Vector>& basis);

/// Nonzero rows of the reduced echelon form of the given vectors.
std::vector<Vector> row_space_basis(const std::vector<Vector>& vectors, std::size_t dim);

/// The quotient Z/B of a cycle space by a boundary space, both given by
/// spanning sets in a common ambient coordinate system (B must lie inside Z).
///
/// Representatives are chosen greedily: the echelon rows of Z are visited in
/// order, and each one that is independent of B plus the rows already chosen
/// becomes a representative.
class Subquotient {
 public:
  Subquotient() = default;
  Subquotient(const std::vector<Vector>& cycles, const std::vector<Vector>& boundaries,
              std::size_t ambient_dim);

  std::size_t dimension() const { return representatives_.size(); }
  std::size_t ambient_dimension() const { return ambient_dim_; }
  const std::vector<Vector>& representatives() const { return representatives_; }
  const std::vector<Vector>& boundary_basis() const { return boundary_basis_; }

  /// Coordinates of the class of v against the representatives; nullopt when v
  /// is not a cycle.
  std::optional<Vector> coordinates(const Vector& v) const;

  /// Sum of coordinates[i] * representative[i].
  Vector lift(const Vector& coordinates) const;

 private:
  std::size_t ambient_dim_ = 0;
  std::vector<Vector> representatives_;
  std::vector<Vector> boundary_basis_;
  Matrix combined_;  // columns: representatives then boundary basis
};

}  // namespace hnil
