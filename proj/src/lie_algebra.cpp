#include "hnil/lie_algebra.hpp"

#include "hnil/errors.hpp"

namespace hnil {

namespace {

void axpy(Vector& y, const Rational& a, const Vector& x) {
  if (a == 0) return;
  for (std::size_t k = 0; k < y.size(); ++k) {
    if (x[k] != 0) y[k] += a * x[k];
  }
}

int koszul(int a, int b) { return (a % 2 != 0 && b % 2 != 0) ? -1 : 1; }

}  // namespace

void GradedLieAlgebra::set_bracket(std::size_t i, std::size_t j, Vector value) {
  if (value.size() != dimension()) throw std::invalid_argument("set_bracket: wrong vector length");
  if (is_zero(value)) {
    constants_.erase({i, j});
  } else {
    constants_[{i, j}] = std::move(value);
  }
}

Vector GradedLieAlgebra::bracket_basis(std::size_t i, std::size_t j) const {
  auto it = constants_.find({i, j});
  return it == constants_.end() ? Vector(dimension()) : it->second;
}

Vector GradedLieAlgebra::bracket(const Vector& x, const Vector& y) const {
  Vector out(dimension());
  for (const auto& [ij, value] : constants_) {
    const auto [i, j] = ij;
    if (x[i] == 0 || y[j] == 0) continue;
    axpy(out, x[i] * y[j], value);
  }
  return out;
}

Vector GradedLieAlgebra::unit_vector(std::size_t i) const {
  Vector v(dimension());
  v.at(i) = 1;
  return v;
}

std::vector<Violation> GradedLieAlgebra::validate() const {
  std::vector<Violation> out;
  const std::size_t n = dimension();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Vector ij = bracket_basis(i, j);
      Vector sum = bracket_basis(j, i);
      for (auto& x : sum) x *= koszul(degree(i), degree(j));
      axpy(sum, Rational(1), ij);
      if (!is_zero(sum)) {
        out.push_back({basis_[i].label + "," + basis_[j].label, "graded antisymmetry fails"});
      }
      for (std::size_t k = 0; k < n; ++k) {
        if (ij[k] != 0 && degree(k) != degree(i) + degree(j)) {
          out.push_back({basis_[i].label + "," + basis_[j].label, "bracket is not additive in degree"});
        }
      }
    }
  }
  // [x,[y,z]] = [[x,y],z] + (-1)^{|x||y|} [y,[x,z]]
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        const Vector x = unit_vector(i), y = unit_vector(j), z = unit_vector(k);
        Vector lhs = bracket(x, bracket(y, z));
        axpy(lhs, Rational(-1), bracket(bracket(x, y), z));
        axpy(lhs, Rational(-koszul(degree(i), degree(j))), bracket(y, bracket(x, z)));
        if (!is_zero(lhs)) {
          out.push_back({basis_[i].label + "," + basis_[j].label + "," + basis_[k].label, "Jacobi identity fails"});
        }
      }
    }
  }
  return out;
}

int nil_index(const GradedLieAlgebra& lie) {
  const std::size_t n = lie.dimension();
  if (n == 0) return 0;
  std::vector<Vector> gamma;
  for (std::size_t i = 0; i < n; ++i) gamma.push_back(lie.unit_vector(i));

  int q = 0;
  while (!gamma.empty()) {
    ++q;
    std::vector<Vector> next;
    for (std::size_t i = 0; i < n; ++i) {
      const Vector b = lie.unit_vector(i);
      for (const auto& g : gamma) next.push_back(lie.bracket(b, g));
    }
    next = row_space_basis(next, n);
    if (next.size() >= gamma.size() && !next.empty()) {
      throw InvariantError("lower central series does not terminate (Lie algebra is not nilpotent)");
    }
    gamma = std::move(next);
  }
  return q;
}

}  // namespace hnil
