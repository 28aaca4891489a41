#pragma once

#include "hnil/cdga.hpp"
#include "hnil/linalg.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace hnil {

struct LieBasisElement {
  std::string label;
  int degree = 0;
};

/// Finite-dimensional graded Lie algebra given by exact structure constants
/// on a basis. Missing pairs bracket to zero.
class GradedLieAlgebra {
 public:
  GradedLieAlgebra() = default;
  explicit GradedLieAlgebra(std::vector<LieBasisElement> basis) : basis_(std::move(basis)) {}

  std::size_t dimension() const { return basis_.size(); }
  const std::vector<LieBasisElement>& basis() const { return basis_; }
  int degree(std::size_t i) const { return basis_.at(i).degree; }

  void set_bracket(std::size_t i, std::size_t j, Vector value);
  /// [b_i, b_j] as a coefficient vector of length dimension().
  Vector bracket_basis(std::size_t i, std::size_t j) const;
  /// Bilinear extension to arbitrary vectors.
  Vector bracket(const Vector& x, const Vector& y) const;
  const std::map<std::pair<std::size_t, std::size_t>, Vector>& structure_constants() const { return constants_; }

  Vector unit_vector(std::size_t i) const;

  /// Graded antisymmetry, Jacobi and degree additivity on all basis pairs and triples.
  std::vector<Violation> validate() const;

 private:
  std::vector<LieBasisElement> basis_;
  std::map<std::pair<std::size_t, std::size_t>, Vector> constants_;
};

/// Least q with Γ^{q+1} = 0 in the lower central series Γ^1 = L,
/// Γ^{k+1} = [L, Γ^k]; 0 for the zero algebra. Throws InvariantError if the
/// series stalls at a nonzero term.
int nil_index(const GradedLieAlgebra& lie);

}  // namespace hnil
