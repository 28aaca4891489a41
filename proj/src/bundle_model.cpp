#include "hnil/bundle_model.hpp"

#include "hnil/errors.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace hnil {

namespace {

SignaturePtr total_signature_of(const Cdga& base, const std::vector<GeneratorSymbol>& fiber) {
  std::vector<GeneratorSymbol> gens = base.signature()->generators();
  for (auto g : fiber) {
    g.origin = Origin::fiber;
    gens.push_back(std::move(g));
  }
  return make_signature(std::move(gens), base.signature()->truncation());
}

Cdga total_cdga_of(const Cdga& base, const std::vector<GeneratorSymbol>& fiber,
                   const std::vector<Element>& fiber_d_values) {
  auto sig = total_signature_of(base, fiber);
  std::vector<Element> d;
  for (const auto& v : base.d_values()) d.push_back(v.embedded(sig));
  for (const auto& v : fiber_d_values) d.push_back(v.embedded(sig));
  return Cdga(sig, std::move(d));
}

}  // namespace

BundleModel::BundleModel(Cdga base, std::vector<GeneratorSymbol> fiber, std::vector<Element> fiber_d_values)
    : base_(std::move(base)),
      total_(make_signature({}), {}) {
  if (fiber_d_values.size() > fiber.size()) throw SignatureError("more D-values than fiber generators");
  fiber_d_values.resize(fiber.size());
  for (auto& v : fiber_d_values) {
    if (!v.signature()) {
      v = Element::zero(base_.signature());
    } else if (v.signature() != base_.signature() && !(*v.signature() == *base_.signature())) {
      throw SignatureError("D-values must be elements of the base algebra");
    }
  }

  std::vector<std::size_t> order(fiber.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return fiber[a].degree < fiber[b].degree; });
  for (auto i : order) {
    fiber_.push_back(fiber[i]);
    fiber_.back().origin = Origin::fiber;
    fiber_d_values_.push_back(fiber_d_values[i]);
  }
  total_ = total_cdga_of(base_, fiber_, fiber_d_values_);
}

Element BundleModel::fiber_element(std::size_t fiber_index) const {
  return Element::generator(total_signature(), total_index(fiber_index));
}

int BundleModel::max_fiber_degree() const {
  int m = 0;
  for (const auto& g : fiber_) m = std::max(m, g.degree);
  return m;
}

std::vector<int> BundleModel::fiber_degrees() const {
  std::set<int> degrees;
  for (const auto& g : fiber_) degrees.insert(g.degree);
  return {degrees.begin(), degrees.end()};
}

std::vector<std::size_t> BundleModel::fiber_slice(int degree) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < fiber_.size(); ++i) {
    if (fiber_[i].degree == degree) out.push_back(i);
  }
  return out;
}

std::vector<Violation> validate_bundle(const BundleModel& b) {
  std::vector<Violation> out;
  for (auto v : b.base().validate()) {
    v.subject = "base " + v.subject;
    out.push_back(std::move(v));
  }
  const Signature& base_sig = *b.base_signature();

  std::set<std::string> names;
  auto check_name = [&](const std::string& name) {
    if (!names.insert(name).second) out.push_back({name, "duplicate generator name"});
  };
  for (const auto& g : base_sig.generators()) {
    check_name(g.name);
    if (g.degree < 2) out.push_back({g.name, "base generator degree must be at least 2 (simply connected base)"});
  }
  for (const auto& g : b.fiber()) {
    check_name(g.name);
    if (g.degree < 1 || g.degree % 2 == 0) out.push_back({g.name, "fiber degree must be odd"});
  }

  if (const auto t = base_sig.truncation(); t && b.fiber_size() > 0 && *t < b.max_fiber_degree() + 2) {
    out.push_back({"truncate", "truncation degree " + std::to_string(*t) + " must be at least " +
                                   std::to_string(b.max_fiber_degree() + 2) + " (max fiber degree + 2)"});
  }

  for (std::size_t i = 0; i < b.fiber_size(); ++i) {
    const auto& g = b.fiber_generator(i);
    const Element& dv = b.fiber_d_value(i);
    if (dv.is_zero()) continue;
    const auto deg = dv.degree();
    if (!deg) {
      out.push_back({g.name, "D-value is not homogeneous"});
    } else if (*deg != g.degree + 1) {
      out.push_back({g.name, "degree mismatch: expected " + std::to_string(g.degree + 1) + ", found " +
                                 std::to_string(*deg)});
    }
    if (!b.base().apply_differential(dv, Budget::truncate).is_zero()) {
      out.push_back({g.name, "D-value is not a cocycle"});
    }
  }
  return out;
}

void require_valid(const BundleModel& b) {
  const auto violations = validate_bundle(b);
  if (!violations.empty()) throw ValidationError("invalid bundle model: " + join_violations(violations));
}

std::vector<CohomologyClass> characteristic_classes(const BundleModel& b) {
  require_valid(b);
  std::vector<CohomologyClass> out;
  for (std::size_t i = 0; i < b.fiber_size(); ++i) {
    out.push_back(b.base().class_of(b.fiber_d_value(i), b.fiber_generator(i).degree + 1));
  }
  return out;
}

int fiber_degree_count(const BundleModel& b) { return static_cast<int>(b.fiber_degrees().size()); }

Element GeneratorSubstitution::new_generator(const BundleModel& b) const {
  return b.fiber_element(target) - correction;
}

std::string GeneratorSubstitution::describe() const {
  std::string s = new_name + " = " + target_name;
  if (correction.is_zero()) return s;
  if (correction.terms().size() == 1 && correction.terms().begin()->second > 0) {
    return s + " - " + format_element(correction);
  }
  return s + " - (" + format_element(correction) + ")";
}

LowerImage lower_degree_image(const BundleModel& b, int m) {
  const Cdga& base = b.base();
  LowerImage out;
  for (std::size_t u = 0; u < b.fiber_size(); ++u) {
    const int du = b.fiber_generator(u).degree;
    if (du >= m) continue;
    const CohomologyClass alpha = base.class_of(b.fiber_d_value(u), du + 1);
    const int hdeg = m - du;
    for (std::size_t h = 0; h < base.betti(hdeg); ++h) {
      out.classes.push_back(base.cup(base.basis_class(hdeg, h), alpha).coordinates);
      out.terms.push_back({u, hdeg, h, Rational(1)});
    }
  }
  return out;
}

namespace {

KillWitness make_witness(const BundleModel& b, int m, const std::vector<std::size_t>& slice, const Vector& w,
                         const std::vector<Vector>& slice_classes, const LowerImage& lower) {
  const Cdga& base = b.base();
  const SignaturePtr& tsig = b.total_signature();
  KillWitness out;
  out.kernel = w;

  Vector target_class(base.betti(m + 1));
  for (std::size_t k = 0; k < slice.size(); ++k) {
    for (std::size_t r = 0; r < target_class.size(); ++r) target_class[r] += w[k] * slice_classes[k][r];
  }
  const auto lambda = in_span(target_class, lower.classes);
  if (!lambda) throw InvariantError("killable degree without a module combination");

  Element combination(tsig);        // sum w_v v
  Element module_part(tsig);        // sum lambda h u
  Element d_target(b.base_signature());  // D(combination - module_part), inside A
  for (std::size_t k = 0; k < slice.size(); ++k) {
    if (w[k] == 0) continue;
    combination += w[k] * b.fiber_element(slice[k]);
    d_target += w[k] * b.fiber_d_value(slice[k]);
  }
  for (std::size_t k = 0; k < lower.terms.size(); ++k) {
    if ((*lambda)[k] == 0) continue;
    ModuleTerm term = lower.terms[k];
    term.coefficient = (*lambda)[k];
    const Element h = base.representative(base.basis_class(term.cohomology_degree, term.cohomology_index));
    module_part += term.coefficient * (h.embedded(tsig) * b.fiber_element(term.fiber_generator));
    d_target -= term.coefficient * (h * b.fiber_d_value(term.fiber_generator));
    out.module_terms.push_back(term);
  }

  const auto source = b.base_signature()->degree_basis(m);
  const auto phi_coords = solve(base.differential_matrix(m), d_target.coordinates(b.base_signature()->degree_basis(m + 1)));
  if (!phi_coords) throw InvariantError("D-value of the killed combination is not exact");
  out.phi = Element::from_coordinates(b.base_signature(), source, *phi_coords);

  const auto first = std::find_if(w.begin(), w.end(), [](const Rational& x) { return x != 0; });
  const std::size_t target = slice[static_cast<std::size_t>(first - w.begin())];
  const Element new_generator = combination - module_part - out.phi.embedded(tsig);
  const Element dnew = b.total().apply_differential(new_generator);
  if (!dnew.is_zero()) {
    throw InvariantError("substituted generator has nonzero differential " + format_element(dnew));
  }
  out.substitution.target = target;
  out.substitution.target_name = b.fiber_generator(target).name;
  out.substitution.new_name = b.fiber_generator(target).name + "'";
  out.substitution.correction = b.fiber_element(target) - new_generator;
  return out;
}

}  // namespace

NpReport compute_n_lin(const BundleModel& b) {
  require_valid(b);
  const Cdga& base = b.base();
  NpReport report;
  report.n = fiber_degree_count(b);

  for (int m : b.fiber_degrees()) {
    DegreeVerdict verdict;
    verdict.degree = m;
    verdict.generators = b.fiber_slice(m);
    const std::size_t h_dim = base.betti(m + 1);

    std::vector<Vector> slice_classes;
    for (auto v : verdict.generators) slice_classes.push_back(base.class_of(b.fiber_d_value(v), m + 1).coordinates);
    const LowerImage lower = lower_degree_image(b, m);

    std::vector<Vector> columns = slice_classes;
    columns.insert(columns.end(), lower.classes.begin(), lower.classes.end());
    std::vector<Vector> killable;
    for (auto& k : kernel_basis(Matrix::from_columns(columns, h_dim))) {
      k.resize(verdict.generators.size());
      killable.push_back(std::move(k));
    }
    killable = row_space_basis(killable, verdict.generators.size());

    if (killable.empty()) {
      verdict.verdict = Verdict::injective;
      ++report.n_lin;
    } else {
      verdict.verdict = Verdict::killable;
      verdict.witness = make_witness(b, m, verdict.generators, killable.front(), slice_classes, lower);
    }
    report.degrees.push_back(std::move(verdict));
  }
  return report;
}

int count_injective_degrees(const BundleModel& b) {
  require_valid(b);
  int count = 0;
  for (int m : b.fiber_degrees()) {
    std::vector<Vector> columns;
    const auto slice = b.fiber_slice(m);
    for (auto v : slice) columns.push_back(b.base().class_of(b.fiber_d_value(v), m + 1).coordinates);
    if (rref(Matrix::from_columns(columns, b.base().betti(m + 1))).rank() == slice.size()) ++count;
  }
  return count;
}

bool total_space_simply_connected(const BundleModel& b) { return b.total().betti(1) == 0; }

Normalization normalize_generators(const BundleModel& b) {
  const NpReport report = compute_n_lin(b);
  std::vector<GeneratorSubstitution> subs;
  std::vector<GeneratorSymbol> fiber = b.fiber();
  std::vector<Element> d_values = b.fiber_d_values();
  for (const auto& degree : report.degrees) {
    if (!degree.witness) continue;
    const auto& s = degree.witness->substitution;
    if (s.is_identity()) continue;
    fiber[s.target].name = s.new_name;
    d_values[s.target] = Element::zero(b.base_signature());
    subs.push_back(s);
  }
  return {std::move(subs), BundleModel(b.base(), std::move(fiber), std::move(d_values))};
}

}  // namespace hnil
