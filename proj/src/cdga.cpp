#include "hnil/cdga.hpp"

#include "hnil/errors.hpp"

namespace hnil {

std::string join_violations(const std::vector<Violation>& violations) {
  std::string s;
  for (const auto& v : violations) {
    if (!s.empty()) s += "; ";
    s += v.to_string();
  }
  return s;
}

Cdga::Cdga(SignaturePtr sig, std::vector<Element> d_values) : sig_(std::move(sig)), d_values_(std::move(d_values)) {
  if (d_values_.size() > sig_->size()) throw SignatureError("more d-values than generators");
  d_values_.resize(sig_->size());
  for (auto& v : d_values_) {
    if (!v.signature()) v = Element::zero(sig_);
  }
}

Element Cdga::apply_differential(const Element& u, Budget budget) const {
  if (u.signature() && u.signature() != sig_ && !(*u.signature() == *sig_)) {
    throw SignatureError("element does not belong to this algebra");
  }
  if (!u.signature()) return Element::zero(sig_);
  return apply_leibniz(d_values_, 1, u, budget);
}

std::vector<Violation> Cdga::validate() const {
  std::vector<Violation> out;
  bool usable = true;
  for (std::size_t i = 0; i < sig_->size(); ++i) {
    const auto& g = (*sig_)[i];
    const Element& dv = d_values_[i];
    if (dv.signature() != sig_ && !(*dv.signature() == *sig_)) {
      out.push_back({g.name, "d-value uses an unknown symbol"});
      usable = false;
      continue;
    }
    if (dv.is_zero()) continue;
    if (const auto deg = dv.degree()) {
      if (*deg != g.degree + 1) {
        out.push_back({g.name, "degree mismatch: expected " + std::to_string(g.degree + 1) + ", found " +
                                   std::to_string(*deg)});
      }
    } else {
      out.push_back({g.name, "d-value is not homogeneous"});
    }
  }
  if (!usable) return out;
  for (std::size_t i = 0; i < sig_->size(); ++i) {
    const Element dd = apply_differential(d_values_[i], Budget::truncate);
    if (!dd.is_zero()) {
      out.push_back({(*sig_)[i].name, "d(d(" + (*sig_)[i].name + ")) = " + format_element(dd) + " != 0"});
    }
  }
  return out;
}

Matrix Cdga::differential_matrix(int k) const {
  const auto source = sig_->degree_basis(k);
  // Degree T + 1 is zero in the truncated algebra.
  const auto target = sig_->within_budget(k + 1) ? sig_->degree_basis(k + 1) : std::vector<Monomial>{};
  Matrix m(target.size(), source.size());
  for (std::size_t j = 0; j < source.size(); ++j) {
    const Vector col =
        apply_differential(Element::monomial(sig_, source[j]), Budget::truncate).coordinates(target);
    for (std::size_t i = 0; i < target.size(); ++i) m(i, j) = col[i];
  }
  return m;
}

const Cdga::DegreeData& Cdga::degree_data(int k) const {
  {
    std::lock_guard lock(cache_->mutex);
    if (auto it = cache_->degrees.find(k); it != cache_->degrees.end()) return *it->second;
  }
  if (!sig_->within_budget(k)) {
    throw BudgetError("H^" + std::to_string(k) + " exceeds the truncation degree " +
                      std::to_string(*sig_->truncation()));
  }
  auto data = std::make_shared<DegreeData>();
  data->basis = sig_->degree_basis(k);
  const std::vector<Vector> cycles = kernel_basis(differential_matrix(k));
  std::vector<Vector> boundaries;
  if (k >= 1) {
    const Matrix in = differential_matrix(k - 1);
    for (std::size_t c = 0; c < in.cols(); ++c) boundaries.push_back(in.column(c));
  }
  data->quotient = Subquotient(cycles, boundaries, data->basis.size());

  // Results are deterministic, so a concurrent duplicate insert is harmless.
  std::lock_guard lock(cache_->mutex);
  auto [it, inserted] = cache_->degrees.emplace(k, std::move(data));
  return *it->second;
}

const Subquotient& Cdga::cohomology(int k) const { return degree_data(k).quotient; }

CohomologyBasis Cdga::cohomology_basis(int k) const {
  const DegreeData& data = degree_data(k);
  CohomologyBasis out;
  out.dimension = data.quotient.dimension();
  for (const auto& rep : data.quotient.representatives()) {
    out.representatives.push_back(Element::from_coordinates(sig_, data.basis, rep));
  }
  return out;
}

CohomologyClass Cdga::class_of(const Element& u, int degree) const {
  const Element x = u.signature() ? u : Element::zero(sig_);
  if (!x.is_zero() && x.degree() != degree) {
    throw InvariantError("class_of: element " + format_element(x) + " is not homogeneous of degree " +
                         std::to_string(degree));
  }
  const DegreeData& data = degree_data(degree);
  if (!apply_differential(x, Budget::truncate).is_zero()) {
    throw NotACocycleError(format_element(x) + " is not a cocycle");
  }
  auto coords = data.quotient.coordinates(x.coordinates(data.basis));
  if (!coords) throw NotACocycleError(format_element(x) + " is not a cocycle");
  return {degree, std::move(*coords)};
}

Element Cdga::representative(const CohomologyClass& c) const {
  const DegreeData& data = degree_data(c.degree);
  return Element::from_coordinates(sig_, data.basis, data.quotient.lift(c.coordinates));
}

CohomologyClass Cdga::cup(const CohomologyClass& a, const CohomologyClass& b) const {
  return class_of(representative(a) * representative(b), a.degree + b.degree);
}

CohomologyClass Cdga::basis_class(int degree, std::size_t index) const {
  CohomologyClass c{degree, Vector(betti(degree))};
  c.coordinates.at(index) = 1;
  return c;
}

}  // namespace hnil
