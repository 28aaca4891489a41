#pragma once

#include "hnil/graded_algebra.hpp"
#include "hnil/linalg.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

namespace hnil {

/// One problem found by a validator. Validators return these as data.
struct Violation {
  std::string subject;
  std::string message;

  std::string to_string() const { return subject.empty() ? message : subject + ": " + message; }
  friend bool operator==(const Violation&, const Violation&) = default;
};

std::string join_violations(const std::vector<Violation>& violations);

struct CohomologyClass {
  int degree = 0;
  Vector coordinates;  // against the canonical basis of H^degree

  bool is_zero() const { return hnil::is_zero(coordinates); }
  friend bool operator==(const CohomologyClass&, const CohomologyClass&) = default;
};

struct CohomologyBasis {
  std::size_t dimension = 0;
  std::vector<Element> representatives;
};

/// A free graded-commutative algebra with a differential given on generators.
class Cdga {
 public:
  /// `d_values[i]` is d of generator i; a shorter list is padded with zeros.
  Cdga(SignaturePtr sig, std::vector<Element> d_values);

  const SignaturePtr& signature() const { return sig_; }
  const std::vector<Element>& d_values() const { return d_values_; }
  const Element& d_value(std::size_t generator) const { return d_values_.at(generator); }

  /// Leibniz extension of the generator values.
  Element apply_differential(const Element& u, Budget budget = Budget::strict) const;

  /// d^2 = 0, degree and membership checks, one violation per problem.
  std::vector<Violation> validate() const;

  /// Matrix of d : A^k -> A^{k+1} against the degree_basis monomials.
  Matrix differential_matrix(int k) const;

  /// Requires k <= T when truncated; for k = T the differential into the
  /// truncated degree T + 1 is zero.
  CohomologyBasis cohomology_basis(int k) const;
  std::size_t betti(int k) const { return cohomology(k).dimension(); }

  /// Class of a cocycle of the given degree; throws NotACocycleError otherwise.
  CohomologyClass class_of(const Element& u, int degree) const;
  Element representative(const CohomologyClass& c) const;
  CohomologyClass cup(const CohomologyClass& a, const CohomologyClass& b) const;
  CohomologyClass basis_class(int degree, std::size_t index) const;

 private:
  struct DegreeData {
    std::vector<Monomial> basis;
    Subquotient quotient;
  };
  const Subquotient& cohomology(int k) const;
  const DegreeData& degree_data(int k) const;

  SignaturePtr sig_;
  std::vector<Element> d_values_;

  struct Cache {
    std::mutex mutex;
    std::map<int, std::shared_ptr<const DegreeData>> degrees;
  };
  std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

}  // namespace hnil
