#pragma once

#include "hnil/cdga.hpp"
#include "hnil/graded_algebra.hpp"

#include <optional>
#include <string>
#include <vector>

namespace hnil {

/// Relative Sullivan algebra (A,d) -> (A (x) ΛV, D) with DV inside A: the
/// rational model of a principal bundle.
///
/// The fiber generators are kept sorted by degree (stable in declaration
/// order). The total algebra A (x) ΛV uses the base generators first, then the
/// fiber generators, and inherits the base truncation degree.
class BundleModel {
 public:
  /// `fiber_d_values[i]` lives in the base signature; missing entries are zero.
  BundleModel(Cdga base, std::vector<GeneratorSymbol> fiber, std::vector<Element> fiber_d_values);

  const Cdga& base() const { return base_; }
  const Cdga& total() const { return total_; }
  const SignaturePtr& base_signature() const { return base_.signature(); }
  const SignaturePtr& total_signature() const { return total_.signature(); }

  std::size_t fiber_size() const { return fiber_.size(); }
  const std::vector<GeneratorSymbol>& fiber() const { return fiber_; }
  const GeneratorSymbol& fiber_generator(std::size_t i) const { return fiber_.at(i); }
  /// D of fiber generator i, as an element of the base algebra.
  const Element& fiber_d_value(std::size_t i) const { return fiber_d_values_.at(i); }
  const std::vector<Element>& fiber_d_values() const { return fiber_d_values_; }

  /// Index of fiber generator i inside the total signature.
  std::size_t total_index(std::size_t fiber_index) const { return base_signature()->size() + fiber_index; }
  /// Fiber generator i as an element of A (x) ΛV.
  Element fiber_element(std::size_t fiber_index) const;

  /// 0 for an empty fiber.
  int max_fiber_degree() const;
  /// Distinct fiber degrees, ascending.
  std::vector<int> fiber_degrees() const;
  /// Fiber indices of the given degree, in order.
  std::vector<std::size_t> fiber_slice(int degree) const;

 private:
  Cdga base_;
  std::vector<GeneratorSymbol> fiber_;
  std::vector<Element> fiber_d_values_;
  Cdga total_;
};

std::vector<Violation> validate_bundle(const BundleModel& b);
/// Throws ValidationError listing the violations when the model is invalid.
void require_valid(const BundleModel& b);

/// alpha_v = [Dv] in H^{deg v + 1}(A), indexed like the fiber.
std::vector<CohomologyClass> characteristic_classes(const BundleModel& b);

/// Number of distinct fiber degrees.
int fiber_degree_count(const BundleModel& b);

/// The generator `target` is replaced by target - correction.
struct GeneratorSubstitution {
  std::size_t target = 0;  // fiber index
  std::string target_name;
  std::string new_name;
  Element correction;  // in the total signature

  /// target - correction, as an element of A (x) ΛV.
  Element new_generator(const BundleModel& b) const;
  /// Human-readable "y' = y - e*x".
  std::string describe() const;
  /// True when the generator already has D-value 0 and nothing changes.
  bool is_identity() const { return correction.is_zero(); }
};

/// One summand h * u of the lower-degree module combination, where h is the
/// canonical cohomology basis class `cohomology_index` of H^{m - deg u}(A).
struct ModuleTerm {
  std::size_t fiber_generator = 0;
  int cohomology_degree = 0;
  std::size_t cohomology_index = 0;
  Rational coefficient;
};

struct KillWitness {
  Vector kernel;                         // coefficients over the degree-m fiber slice
  std::vector<ModuleTerm> module_terms;  // realises the class of D(kernel combination)
  Element phi;                           // in A, with d(phi) = D(w - sum h u)
  GeneratorSubstitution substitution;
};

enum class Verdict { injective, killable };

struct DegreeVerdict {
  int degree = 0;
  std::vector<std::size_t> generators;  // fiber indices of the slice W^m
  Verdict verdict = Verdict::injective;
  std::optional<KillWitness> witness;
};

struct NpReport {
  std::vector<DegreeVerdict> degrees;
  int n_lin = 0;
  int n = 0;
};

/// Spanning set of S inside H^{m+1}(A): the cup products h * alpha_u for fiber
/// generators u of degree < m and h in the canonical basis of H^{m - deg u}(A).
/// The matching ModuleTerm (with coefficient 1) is returned alongside each.
struct LowerImage {
  std::vector<Vector> classes;
  std::vector<ModuleTerm> terms;
};
LowerImage lower_degree_image(const BundleModel& b, int m);

/// Degree-by-degree computation of N_lin, an upper bound for N(p) realised by
/// triangular changes of generators.
NpReport compute_n_lin(const BundleModel& b);

/// Number of degrees m where W^m -> H^{m+1}(A) is injective for the generators
/// as given (no quotient by lower-degree images).
int count_injective_degrees(const BundleModel& b);

/// H^1 of the total model vanishes, the rational shadow of E being simply
/// connected. Needs no extra budget since valid models have T >= 3.
bool total_space_simply_connected(const BundleModel& b);

struct Normalization {
  std::vector<GeneratorSubstitution> substitutions;
  BundleModel normalized;
};

/// Applies the witnesses of compute_n_lin: in each killable degree one
/// generator is replaced by a new one whose D-value is exactly zero.
Normalization normalize_generators(const BundleModel& b);

}  // namespace hnil
