#include "hnil/derivation.hpp"

#include "hnil/errors.hpp"

namespace hnil {

Derivation::Derivation(const BundleModel& b, int p)
    : degree_(p), sig_(b.total_signature()), fiber_offset_(b.total_index(0)) {
  for (const auto& g : b.fiber()) {
    fiber_names_.push_back(g.name);
    fiber_degrees_.push_back(g.degree);
    values_.push_back(Element::zero(sig_));
  }
}

void Derivation::set_value(std::size_t fiber_index, Element value) {
  if (!value.signature()) value = Element::zero(sig_);
  if (!value.is_zero()) {
    const int expected = fiber_degrees_.at(fiber_index) - degree_;
    if (value.degree() != expected) {
      throw InvariantError("derivation value " + format_element(value) + " for " + fiber_names_[fiber_index] +
                           " must be homogeneous of degree " + std::to_string(expected));
    }
  }
  values_.at(fiber_index) = value.embedded(sig_);
}

Derivation Derivation::zero_of_degree(int p) const {
  Derivation out = *this;
  out.degree_ = p;
  for (auto& v : out.values_) v = Element::zero(sig_);
  return out;
}

bool Derivation::is_zero() const {
  for (const auto& v : values_) {
    if (!v.is_zero()) return false;
  }
  return true;
}

std::vector<Element> Derivation::generator_values() const {
  std::vector<Element> out(sig_->size(), Element::zero(sig_));
  for (std::size_t i = 0; i < values_.size(); ++i) out[fiber_offset_ + i] = values_[i];
  return out;
}

namespace {

void require_compatible(const Derivation& a, const Derivation& b) {
  if (a.degree() != b.degree()) throw InvariantError("derivations of different degrees cannot be added");
  if (a.signature() != b.signature() && !(*a.signature() == *b.signature())) {
    throw SignatureError("derivations belong to different models");
  }
}

}  // namespace

Derivation& Derivation::operator+=(const Derivation& other) {
  require_compatible(*this, other);
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] += other.values_[i];
  return *this;
}

Derivation& Derivation::operator-=(const Derivation& other) {
  require_compatible(*this, other);
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] -= other.values_[i];
  return *this;
}

Derivation& Derivation::operator*=(const Rational& c) {
  for (auto& v : values_) v *= c;
  return *this;
}

bool operator==(const Derivation& a, const Derivation& b) {
  return a.degree_ == b.degree_ && a.values_ == b.values_;
}

std::string Derivation::describe() const {
  std::string s;
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (values_[i].is_zero()) continue;
    if (!s.empty()) s += ", ";
    s += fiber_names_[i] + " -> " + format_element(values_[i]);
  }
  return s.empty() ? "0" : s;
}

Element apply_derivation(const Derivation& theta, const Element& u) {
  if (!u.signature()) return Element::zero(theta.signature());
  return apply_leibniz(theta.generator_values(), -theta.degree(), u);
}

Derivation differential(const BundleModel& b, const Derivation& theta) {
  Derivation out(b, theta.degree() - 1);
  for (std::size_t i = 0; i < theta.fiber_size(); ++i) {
    out.set_value(i, b.total().apply_differential(theta.value(i)));
  }
  return out;
}

Derivation bracket(const Derivation& t1, const Derivation& t2) {
  if (t1.signature() != t2.signature() && !(*t1.signature() == *t2.signature())) {
    throw SignatureError("derivations belong to different models");
  }
  const int p1 = t1.degree(), p2 = t2.degree();
  const bool sign_flip = (p1 % 2 != 0) && (p2 % 2 != 0);
  Derivation out = t1.zero_of_degree(p1 + p2);
  for (std::size_t i = 0; i < t1.fiber_size(); ++i) {
    Element v = apply_derivation(t1, t2.value(i));
    if (sign_flip) {
      v += apply_derivation(t2, t1.value(i));
    } else {
      v -= apply_derivation(t2, t1.value(i));
    }
    out.set_value(i, std::move(v));
  }
  return out;
}

std::vector<Derivation> derivation_space_basis(const BundleModel& b, int p) {
  if (p < 0) throw std::invalid_argument("derivation_space_basis: negative degree");
  std::vector<Derivation> out;
  for (std::size_t v = 0; v < b.fiber_size(); ++v) {
    const int target = b.fiber_generator(v).degree - p;
    if (target < 0) continue;
    for (const auto& m : b.total_signature()->degree_basis(target)) {
      Derivation theta(b, p);
      theta.set_value(v, Element::monomial(b.total_signature(), m));
      out.push_back(std::move(theta));
    }
  }
  return out;
}

DerivationBasis::DerivationBasis(const BundleModel& b, int p) : zero_(b, p), degree_(p) {
  elements_ = derivation_space_basis(b, p);
  for (std::size_t v = 0; v < b.fiber_size(); ++v) {
    offsets_.push_back(slots_.size());
    const int target = b.fiber_generator(v).degree - p;
    target_bases_.push_back(target < 0 ? std::vector<Monomial>{} : b.total_signature()->degree_basis(target));
    for (const auto& m : target_bases_.back()) slots_.emplace_back(v, m);
  }
}

Vector DerivationBasis::coordinates(const Derivation& theta) const {
  if (theta.degree() != degree_) throw InvariantError("derivation has the wrong degree for this basis");
  Vector out;
  out.reserve(slots_.size());
  for (std::size_t v = 0; v < target_bases_.size(); ++v) {
    const Vector part = theta.value(v).coordinates(target_bases_[v]);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

Derivation DerivationBasis::from_coordinates(const Vector& coordinates) const {
  if (coordinates.size() != slots_.size()) throw std::invalid_argument("from_coordinates: wrong length");
  Derivation theta = zero_;
  for (std::size_t v = 0; v < target_bases_.size(); ++v) {
    const auto first = coordinates.begin() + static_cast<std::ptrdiff_t>(offsets_[v]);
    const Vector part(first, first + static_cast<std::ptrdiff_t>(target_bases_[v].size()));
    theta.set_value(v, Element::from_coordinates(zero_.signature(), target_bases_[v], part));
  }
  return theta;
}

DerivationHomology::DerivationHomology(const BundleModel& b) : max_degree_(b.max_fiber_degree()) {
  require_valid(b);
  for (int p = 0; p <= max_degree_ + 1; ++p) bases_.emplace_back(b, p);

  differentials_.emplace_back();  // no differential out of Der^0 is used
  for (int p = 1; p <= max_degree_ + 1; ++p) {
    const DerivationBasis& source = basis(p);
    const DerivationBasis& target = basis(p - 1);
    std::vector<Vector> columns;
    for (const auto& theta : source.elements()) columns.push_back(target.coordinates(differential(b, theta)));
    differentials_.push_back(Matrix::from_columns(columns, target.size()));
  }

  homology_.emplace_back();
  std::vector<LieBasisElement> lie_basis;
  for (int p = 1; p <= max_degree_; ++p) {
    const Matrix& in = differential_matrix(p + 1);
    std::vector<Vector> boundaries;
    for (std::size_t c = 0; c < in.cols(); ++c) boundaries.push_back(in.column(c));
    homology_.emplace_back(kernel_basis(differential_matrix(p)), boundaries, basis(p).size());
    global_offsets_.push_back(lie_basis.size());
    for (std::size_t i = 0; i < homology_.back().dimension(); ++i) {
      lie_basis.push_back({"h" + std::to_string(p) + "." + std::to_string(i), p});
    }
  }

  lie_ = GradedLieAlgebra(std::move(lie_basis));
  std::vector<std::vector<Derivation>> reps(static_cast<std::size_t>(max_degree_ + 1));
  for (int p = 1; p <= max_degree_; ++p) reps[static_cast<std::size_t>(p)] = representatives(p);
  for (int p1 = 1; p1 <= max_degree_; ++p1) {
    for (int p2 = 1; p1 + p2 <= max_degree_; ++p2) {
      const auto& r1 = reps[static_cast<std::size_t>(p1)];
      const auto& r2 = reps[static_cast<std::size_t>(p2)];
      for (std::size_t i = 0; i < r1.size(); ++i) {
        for (std::size_t j = 0; j < r2.size(); ++j) {
          lie_.set_bracket(global_index(p1, i), global_index(p2, j), global_class(bracket(r1[i], r2[j])));
        }
      }
    }
  }
}

std::size_t DerivationHomology::dimension(int p) const {
  if (p < 1 || p > max_degree_) return 0;
  return homology(p).dimension();
}

std::vector<std::pair<int, std::size_t>> DerivationHomology::dimensions() const {
  std::vector<std::pair<int, std::size_t>> out;
  for (int p = 1; p <= max_degree_; ++p) {
    if (dimension(p) > 0) out.emplace_back(p, dimension(p));
  }
  return out;
}

std::vector<Derivation> DerivationHomology::representatives(int p) const {
  std::vector<Derivation> out;
  for (const auto& rep : homology(p).representatives()) out.push_back(basis(p).from_coordinates(rep));
  return out;
}

Vector DerivationHomology::class_coordinates(const Derivation& theta) const {
  const int p = theta.degree();
  if (p < 1) throw InvariantError("only positive degrees carry homology classes");
  if (p > max_degree_) {
    if (!theta.is_zero()) throw InvariantError("nonzero derivation above the top degree");
    return {};
  }
  auto coords = homology(p).coordinates(basis(p).coordinates(theta));
  if (!coords) throw NotACocycleError("derivation " + theta.describe() + " is not a cycle");
  return *coords;
}

std::size_t DerivationHomology::global_index(int p, std::size_t local) const {
  return global_offsets_.at(static_cast<std::size_t>(p - 1)) + local;
}

Vector DerivationHomology::global_class(const Derivation& theta) const {
  Vector out(lie_.dimension());
  const Vector local = class_coordinates(theta);
  for (std::size_t i = 0; i < local.size(); ++i) out[global_index(theta.degree(), i)] = local[i];
  return out;
}

GradedLieAlgebra homology_lie(const BundleModel& b) { return DerivationHomology(b).lie_algebra(); }

int hnil(const BundleModel& b) { return nil_index(homology_lie(b)); }

}  // namespace hnil
