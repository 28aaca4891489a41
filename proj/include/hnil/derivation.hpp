#pragma once

#include "hnil/bundle_model.hpp"
#include "hnil/graded_algebra.hpp"
#include "hnil/lie_algebra.hpp"

#include <map>
#include <memory>
#include <string>
#include <vector>

namespace hnil {

/// An A-derivation of A (x) ΛV of homological degree p, i.e. a map of degree -p
/// that vanishes on A. Only the images of the fiber generators are stored.
class Derivation {
 public:
  Derivation() = default;
  /// Zero derivation of degree p on the model's total algebra.
  Derivation(const BundleModel& b, int p);

  /// Zero derivation on the same model with a different degree.
  Derivation zero_of_degree(int p) const;

  int degree() const { return degree_; }
  const SignaturePtr& signature() const { return sig_; }
  std::size_t fiber_offset() const { return fiber_offset_; }
  std::size_t fiber_size() const { return values_.size(); }

  /// Image of fiber generator i (zero when unset).
  const Element& value(std::size_t fiber_index) const { return values_.at(fiber_index); }
  /// Throws InvariantError unless `value` is zero or homogeneous of degree deg v - p.
  void set_value(std::size_t fiber_index, Element value);

  bool is_zero() const;
  /// Values on every generator of the total signature (zero on A).
  std::vector<Element> generator_values() const;

  Derivation& operator+=(const Derivation& other);
  Derivation& operator-=(const Derivation& other);
  Derivation& operator*=(const Rational& c);
  friend Derivation operator+(Derivation a, const Derivation& b) { return a += b; }
  friend Derivation operator-(Derivation a, const Derivation& b) { return a -= b; }
  friend Derivation operator*(const Rational& c, Derivation a) { return a *= c; }
  friend bool operator==(const Derivation& a, const Derivation& b);

  /// "y -> x" style description, terms joined by ", ".
  std::string describe() const;

 private:
  int degree_ = 0;
  SignaturePtr sig_;
  std::size_t fiber_offset_ = 0;
  std::vector<std::string> fiber_names_;
  std::vector<int> fiber_degrees_;
  std::vector<Element> values_;
};

/// Signed Leibniz extension of theta; zero on pure-A monomials.
Element apply_derivation(const Derivation& theta, const Element& u);

/// D(theta) = [D, theta]; on generators v it is D(theta(v)) because DV lies in A.
Derivation differential(const BundleModel& b, const Derivation& theta);

/// [t1, t2] = t1 t2 - (-1)^{p1 p2} t2 t1.
Derivation bracket(const Derivation& t1, const Derivation& t2);

/// Canonical basis of Der^p: one derivation per (fiber generator v, monomial of
/// degree deg v - p), fiber order first, then monomial order. p = 0 is accepted
/// for the differential target of Der^1.
std::vector<Derivation> derivation_space_basis(const BundleModel& b, int p);

/// Coordinates of derivations of a fixed degree against the canonical basis.
class DerivationBasis {
 public:
  DerivationBasis(const BundleModel& b, int p);

  int degree() const { return degree_; }
  std::size_t size() const { return slots_.size(); }
  const std::vector<Derivation>& elements() const { return elements_; }

  Vector coordinates(const Derivation& theta) const;
  Derivation from_coordinates(const Vector& coordinates) const;

 private:
  Derivation zero_;
  int degree_;
  std::vector<Derivation> elements_;
  std::vector<std::pair<std::size_t, Monomial>> slots_;
  std::vector<std::vector<Monomial>> target_bases_;  // per fiber generator
  std::vector<std::size_t> offsets_;                  // first slot of each fiber generator
};

/// The complex Der^0 <- Der^1 <- ... <- Der^{maxdeg V} and its positive homology.
class DerivationHomology {
 public:
  explicit DerivationHomology(const BundleModel& b);

  int max_degree() const { return max_degree_; }
  const DerivationBasis& basis(int p) const { return bases_.at(static_cast<std::size_t>(p)); }
  /// Matrix of D : Der^p -> Der^{p-1}, p >= 1.
  const Matrix& differential_matrix(int p) const { return differentials_.at(static_cast<std::size_t>(p)); }
  const Subquotient& homology(int p) const { return homology_.at(static_cast<std::size_t>(p)); }

  std::size_t dimension(int p) const;
  /// (degree, dimension) for every degree with nonzero homology.
  std::vector<std::pair<int, std::size_t>> dimensions() const;

  /// Representative derivations of the canonical homology basis in degree p.
  std::vector<Derivation> representatives(int p) const;

  /// Class of a cycle of degree p against that degree's homology basis.
  /// Throws NotACocycleError when theta is not a cycle.
  Vector class_coordinates(const Derivation& theta) const;

  /// Global index of (degree p, local index) in lie_algebra().
  std::size_t global_index(int p, std::size_t local) const;
  /// Global coordinate vector of a cycle's class (zero outside its degree).
  Vector global_class(const Derivation& theta) const;

  /// H_+ with the bracket induced from representatives.
  const GradedLieAlgebra& lie_algebra() const { return lie_; }

 private:
  int max_degree_ = 0;
  std::vector<DerivationBasis> bases_;   // 0..max+1
  std::vector<Matrix> differentials_;    // index p: Der^p -> Der^{p-1}, p >= 1
  std::vector<Subquotient> homology_;    // index p >= 1
  std::vector<std::size_t> global_offsets_;
  GradedLieAlgebra lie_;
};

GradedLieAlgebra homology_lie(const BundleModel& b);

/// nil(H_+(Der_A(A (x) ΛV))), the rational homotopical nilpotency index.
int hnil(const BundleModel& b);

}  // namespace hnil
