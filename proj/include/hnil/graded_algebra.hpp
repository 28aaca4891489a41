#pragma once

#include "hnil/linalg.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace hnil {

enum class Origin { base, fiber };

struct GeneratorSymbol {
  std::string name;
  int degree = 1;
  Origin origin = Origin::base;

  bool odd() const { return degree % 2 != 0; }
  friend bool operator==(const GeneratorSymbol&, const GeneratorSymbol&) = default;
};

/// Exponent vector indexed by generator declaration order. Odd generators
/// carry exponent 0 or 1.
struct Monomial {
  std::vector<int> exponents;

  bool is_unit() const;
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Canonical monomial order: lexicographic on exponent vectors, larger
/// exponents of earlier generators first (e^2 before x*y when e < x < y).
struct MonomialOrder {
  bool operator()(const Monomial& a, const Monomial& b) const { return a.exponents > b.exponents; }
};

/// Generators of a free graded-commutative algebra, plus an optional
/// truncation degree T: everything of degree > T is identified with zero.
class Signature {
 public:
  explicit Signature(std::vector<GeneratorSymbol> generators, std::optional<int> truncation = std::nullopt);

  std::size_t size() const { return generators_.size(); }
  const GeneratorSymbol& operator[](std::size_t i) const { return generators_[i]; }
  const std::vector<GeneratorSymbol>& generators() const { return generators_; }
  std::optional<int> truncation() const { return truncation_; }

  std::optional<std::size_t> find(std::string_view name) const;
  std::size_t index_of(std::string_view name) const;  // throws SignatureError

  bool within_budget(int degree) const { return !truncation_ || degree <= *truncation_; }
  int degree(const Monomial& m) const;
  bool odd(const Monomial& m) const { return degree(m) % 2 != 0; }

  Monomial unit() const { return Monomial{std::vector<int>(size(), 0)}; }
  Monomial generator(std::size_t i) const;

  /// All canonical monomials of total degree k, in MonomialOrder.
  /// Throws BudgetError when k exceeds the truncation degree.
  std::vector<Monomial> degree_basis(int k) const;

  /// Same as degree_basis, restricted to monomials in the first `prefix` generators.
  std::vector<Monomial> degree_basis(int k, std::size_t prefix) const;

  friend bool operator==(const Signature&, const Signature&) = default;

 private:
  std::vector<GeneratorSymbol> generators_;
  std::optional<int> truncation_;
};

using SignaturePtr = std::shared_ptr<const Signature>;

SignaturePtr make_signature(std::vector<GeneratorSymbol> generators, std::optional<int> truncation = std::nullopt);

struct SignedMonomial {
  int sign = 1;  // +1, -1, or 0 when the product vanishes
  Monomial monomial;
};

/// Sorts a product of generator powers into canonical order, collecting the
/// Koszul sign of each transposition of two odd factors. The product is zero
/// when an odd generator occurs more than once.
SignedMonomial normalize_monomial(const Signature& sig, const std::vector<std::pair<std::size_t, int>>& factors);
SignedMonomial normalize_monomial(const Signature& sig, const std::vector<std::pair<std::string, int>>& factors);

/// Product of two canonical monomials (no truncation applied).
SignedMonomial multiply_monomials(const Signature& sig, const Monomial& a, const Monomial& b);

/// A homogeneous or inhomogeneous element: a finite sum of monomials with
/// nonzero rational coefficients. A default-constructed element is zero and
/// adopts the signature of whatever it is combined with.
class Element {
 public:
  using Terms = std::map<Monomial, Rational, MonomialOrder>;

  Element() = default;
  explicit Element(SignaturePtr sig) : sig_(std::move(sig)) {}

  static Element zero(SignaturePtr sig) { return Element(std::move(sig)); }
  static Element one(SignaturePtr sig);
  static Element generator(SignaturePtr sig, std::size_t i);
  static Element generator(SignaturePtr sig, std::string_view name);
  static Element monomial(SignaturePtr sig, Monomial m, Rational coefficient = 1);
  /// Sum of coordinates[i] * basis[i].
  static Element from_coordinates(SignaturePtr sig, const std::vector<Monomial>& basis, const Vector& coordinates);

  const SignaturePtr& signature() const { return sig_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// The common degree of all terms; nullopt for zero or inhomogeneous elements.
  std::optional<int> degree() const;
  bool is_homogeneous() const { return is_zero() || degree().has_value(); }
  /// Largest degree among the terms (nullopt for zero).
  std::optional<int> max_degree() const;

  Rational coefficient(const Monomial& m) const;
  /// Coefficients against a monomial basis; throws InvariantError when a term is
  /// not in the basis.
  Vector coordinates(const std::vector<Monomial>& basis) const;

  /// Re-expresses the element in a signature whose leading generators are the
  /// generators of this one.
  Element embedded(const SignaturePtr& target) const;

  /// Adds c*m, dropping the term if it cancels.
  void add_term(const Monomial& m, const Rational& c);

  Element& operator+=(const Element& other);
  Element& operator-=(const Element& other);
  Element& operator*=(const Rational& c);

  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  friend Element operator-(Element a) { return a *= Rational(-1); }
  friend Element operator*(Element a, const Rational& c) { return a *= c; }
  friend Element operator*(const Rational& c, Element a) { return a *= c; }
  /// Graded-commutative product; terms above the truncation degree are dropped.
  friend Element operator*(const Element& a, const Element& b);

  friend bool operator==(const Element& a, const Element& b) { return a.terms_ == b.terms_; }

 private:
  SignaturePtr adopt(const Element& other);

  SignaturePtr sig_;
  Terms terms_;
};

Element multiply(const Element& u, const Element& v);

/// How an operation treats results above the truncation degree.
enum class Budget {
  strict,    ///< throw BudgetError
  truncate,  ///< drop them (they are zero in the quotient)
};

/// Applies the derivation of degree `map_degree` determined by its values on
/// generators (`values[i]` is the image of generator i) to u via the signed
/// Leibniz rule:  theta(xy) = theta(x) y + (-1)^{map_degree |x|} x theta(y).
Element apply_leibniz(const std::vector<Element>& values, int map_degree, const Element& u,
                      Budget budget = Budget::strict);

std::string format_monomial(const Signature& sig, const Monomial& m);
/// Expression syntax of the model files, e.g. "3/2*e^2 - x*y".
std::string format_element(const Element& u);

}  // namespace hnil
