// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.
#include "hnil/bundle_model.hpp"
#include "hnil/catalog.hpp"
#include "hnil/cli.hpp"
#include "hnil/derivation.hpp"
#include "hnil/model_format.hpp"
#include "hnil/sweep.hpp"
#include "hnil/theorem_report.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

using namespace hnil;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (ok) return;
    if (pass) detail = what;
    pass = false;
  }
};

BundleModel example(std::string_view name) { return parse_model(builtin_example(name)); }

std::vector<BundleModel> catalog_models() {
  std::vector<BundleModel> out;
  for (const auto& e : catalog()) out.push_back(parse_model(e.text));
  return out;
}

Rational koszul(int a, int b) { return (a * b) % 2 ? -1 : 1; }

Outcome remark_classes() {
  Outcome o;
  const BundleModel b = example("remark-s1s3");
  const auto classes = characteristic_classes(b);
  o.require(classes.size() == 2 && !classes[0].is_zero() && !classes[1].is_zero(), "alpha_x, alpha_y nonzero");
  const Normalization n = normalize_generators(b);
  o.require(n.substitutions.size() == 1, "exactly one substitution");
  if (n.substitutions.size() != 1) return o;
  o.require(n.substitutions[0].describe() == "y' = y - e*x", "substitution is " + n.substitutions[0].describe());
  o.require(b.total().apply_differential(n.substitutions[0].new_generator(b)).is_zero(), "D(y') = 0");
  const auto after = characteristic_classes(n.normalized);
  o.require(!after[0].is_zero() && after[1].is_zero(), "alpha_x' != 0 and alpha_y' = 0");
  return o;
}

Outcome inequality() {
  Outcome o;
  for (const auto& e : catalog()) {
    const TheoremReport r = check_theorem(parse_model(e.text));
    o.require(r.holds, "catalog " + e.name + ": hnil " + std::to_string(r.hnil) + " outside [" +
                           std::to_string(r.lower_bound) + "," + std::to_string(r.upper_bound) + "]");
  }
  std::size_t violated = 0;
  std::string first;
  for (const auto& e : run_sweep(200, 1)) {
    if (e.report.holds) continue;
    if (!violated) first = format_sweep_entry(e);
    ++violated;
  }
  o.require(violated == 0, "sweep --count 200 --seed 1: " + std::to_string(violated) + " violations, first " + first);
  return o;
}

Outcome trivial_equality() {
  Outcome o;
  int seen = 0;
  for (const char* name : {"trivial-s4-s3", "trivial-s4-s1s3", "trivial-s4-su4"}) {
    const BundleModel b = example(name);
    bool trivial = true;
    for (const auto& d : b.fiber_d_values()) trivial = trivial && d.is_zero();
    const TheoremReport r = check_theorem(b);
    o.require(trivial && r.n >= 1 && r.n <= 3, std::string(name) + " is not a trivial bundle with n in 1..3");
    o.require(r.hnil == r.n, std::string(name) + ": hnil " + std::to_string(r.hnil) + " != n " + std::to_string(r.n));
    ++seen;
  }
  o.require(seen >= 3, "fewer than three models");
  return o;
}

Outcome circle_bundles() {
  Outcome o;
  int with_nlin_one = 0;
  for (const char* name : {"circle-any", "circle-s2", "circle-s2xs2", "circle-trivial"}) {
    const TheoremReport r = check_theorem(example(name));
    o.require(r.hnil == 1, std::string(name) + ": hnil " + std::to_string(r.hnil));
    if (r.n_lin == 1) ++with_nlin_one;
  }
  o.require(with_nlin_one >= 1, "no circle model with n_lin = 1");
  return o;
}

Outcome cp3_example() {
  Outcome o;
  const BundleModel b = example("cp3-su-type");
  const NpReport np = compute_n_lin(b);
  o.require(np.n_lin == 1, "n_lin = " + std::to_string(np.n_lin));
  const Normalization n = normalize_generators(b);
  o.require(n.substitutions.size() == 1 && n.substitutions[0].describe() == "y5' = y5 - a*y3",
            "degree-5 witness y5' = y5 - a*y3");
  const TheoremReport r = check_theorem(b);
  o.require(r.n == 2 && r.n - 1 <= r.hnil && r.hnil <= r.n, "n - 1 <= hnil <= n with n = 2");
  return o;
}

Outcome derived_values() {
  Outcome o;
  using Dims = std::vector<std::pair<int, std::size_t>>;
  const DerivationHomology remark(example("remark-s1s3"));
  o.require(nil_index(remark.lie_algebra()) == 1 && remark.dimensions() == Dims{{1, 1}, {3, 1}}, "remark-s1s3");
  const DerivationHomology hopf(example("hopf-s7"));
  o.require(nil_index(hopf.lie_algebra()) == 1 && hopf.dimensions() == Dims{{3, 1}}, "hopf-s7");
  const DerivationHomology trivial(example("trivial-s4-s1s3"));
  o.require(nil_index(trivial.lie_algebra()) == 2 && trivial.dimensions() == Dims{{1, 1}, {2, 1}, {3, 1}},
            "trivial-s4-s1s3 hnil and dims");
  const auto& lie = trivial.lie_algebra();
  Vector expected(lie.dimension(), 0);
  expected[trivial.global_index(3, 0)] = -1;
  o.require(lie.bracket_basis(trivial.global_index(2, 0), trivial.global_index(1, 0)) == expected,
            "[deg2, deg1] = -(deg3)");
  return o;
}

int brute_force_nil(const GradedLieAlgebra& lie) {
  if (lie.dimension() == 0) return 0;
  std::vector<Vector> level;
  for (std::size_t i = 0; i < lie.dimension(); ++i) level.push_back(lie.unit_vector(i));
  for (int q = 1;; ++q) {
    std::vector<Vector> next;
    for (const auto& x : level)
      for (std::size_t i = 0; i < lie.dimension(); ++i)
        if (Vector y = lie.bracket(x, lie.unit_vector(i)); !is_zero(y)) next.push_back(std::move(y));
    if (next.empty()) return q;
    level = std::move(next);
  }
}

Outcome properties() {
  Outcome o;
  std::mt19937 rng(2024);
  for (const BundleModel& b : catalog_models()) {
    const Cdga& t = b.total();
    const int top = *t.signature()->truncation();
    for (int k = 0; k + 2 <= top; ++k)
      for (const auto& m : t.signature()->degree_basis(k)) {
        const Element u = Element::monomial(t.signature(), m);
        o.require(t.apply_differential(t.apply_differential(u)).is_zero(), "d^2 = 0");
      }

    std::vector<Derivation> all;
    for (int p = 1; p <= b.max_fiber_degree(); ++p)
      for (const auto& th : derivation_space_basis(b, p)) {
        o.require(differential(b, differential(b, th)).is_zero(), "D^2 = 0 on derivations");
        all.push_back(th);
      }
    for (const auto& t1 : all)
      for (const auto& t2 : all) {
        const Derivation lhs = differential(b, bracket(t1, t2));
        const Derivation rhs =
            bracket(differential(b, t1), t2) + koszul(t1.degree(), 1) * bracket(t1, differential(b, t2));
        o.require(lhs == rhs, "differential Leibniz over the bracket");
      }
    for (int trial = 0; !all.empty() && trial < 100; ++trial) {
      const auto& t1 = all[rng() % all.size()];
      const auto& t2 = all[rng() % all.size()];
      const auto& t3 = all[rng() % all.size()];
      o.require(bracket(t1, bracket(t2, t3)) == bracket(bracket(t1, t2), t3) +
                                                     koszul(t1.degree(), t2.degree()) * bracket(t2, bracket(t1, t3)),
                "graded Jacobi on derivations");
    }

    const DerivationHomology h(b);
    o.require(h.lie_algebra().validate().empty(), "homology Lie algebra invariants");
    for (int p1 = 1; p1 <= h.max_degree(); ++p1)
      for (int p2 = 1; p1 + p2 <= h.max_degree(); ++p2)
        for (const auto& z1 : h.representatives(p1))
          for (const auto& z2 : h.representatives(p2)) {
            const auto& above = h.basis(p1 + 1);
            Vector xi(above.size());
            for (auto& c : xi) c = static_cast<int>(rng() % 5) - 2;
            const Derivation moved = z1 + differential(b, above.from_coordinates(xi));
            o.require(h.class_coordinates(bracket(moved, z2)) == h.class_coordinates(bracket(z1, z2)),
                      "homology bracket representative independence");
          }
    o.require(nil_index(h.lie_algebra()) == brute_force_nil(h.lie_algebra()), "nil_index vs brute force");
  }

  const auto sig = make_signature({{"a", 2, Origin::base},
                                   {"b", 3, Origin::base},
                                   {"x", 1, Origin::fiber},
                                   {"y", 3, Origin::fiber},
                                   {"z", 5, Origin::fiber}});
  auto random_monomial = [&] {
    std::vector<std::pair<std::size_t, int>> f;
    for (int i = static_cast<int>(rng() % 4); i > 0; --i) f.emplace_back(rng() % sig->size(), 1);
    const auto s = normalize_monomial(*sig, f);
    return s.sign == 0 ? Element::one(sig) : Element::monomial(sig, s.monomial);
  };
  for (int trial = 0; trial < 300; ++trial) {
    const Element u = random_monomial(), v = random_monomial(), w = random_monomial();
    o.require(u * v == koszul(*u.degree(), *v.degree()) * (v * u), "graded commutativity");
    o.require((u * v) * w == u * (v * w), "associativity");
  }

  const BundleModel proof = example("proof-s2-su4");
  const DerivationHomology ph(proof);
  auto send = [&](int p, std::size_t v, const Element& value) {
    Derivation t(proof, p);
    t.set_value(v, value);
    return t;
  };
  const auto& ts = proof.total_signature();
  const Derivation t10 = send(3, 0, Element::one(ts));
  const Derivation t21 = send(2, 1, proof.fiber_element(0));
  const Derivation t32 = send(2, 2, proof.fiber_element(1));
  for (const auto* th : {&t10, &t21, &t32}) {
    o.require(differential(proof, *th).is_zero() && !is_zero(ph.class_coordinates(*th)),
              "theta_{j,i} is a cycle and not a boundary");
  }
  const Derivation nested = bracket(bracket(t32, t21), t10);
  o.require(!is_zero(ph.class_coordinates(nested)), "nested theta bracket is a nonzero class");
  o.require(nil_index(ph.lie_algebra()) >= 3, "hnil >= 3 on the proof model");
  return o;
}

Outcome interface_stability() {
  Outcome o;
  for (const auto& e : catalog()) {
    const std::string once = format_model(parse_model(e.text));
    o.require(format_model(parse_model(once)) == once, "round trip fixed point for " + e.name);
  }
  for (const auto& e : catalog()) {
    std::string outputs[2];
    for (auto& out : outputs) {
      std::istringstream in(e.text);
      std::ostringstream os, es;
      run_cli({"check", "--json", "-"}, in, os, es);
      out = os.str();
    }
    o.require(!outputs[0].empty() && outputs[0] == outputs[1], "check --json stable for " + e.name);
  }
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"remark-s1s3 classes and normalization y' = y - e*x", remark_classes},
      {"n - n_lin <= hnil <= n on the catalog and 200 random models", inequality},
      {"trivial bundles with n in 1..3 have hnil = n", trivial_equality},
      {"circle bundles have hnil = 1", circle_bundles},
      {"cp3-su-type: n_lin = 1, witness y5' = y5 - a*y3, n - 1 <= hnil <= n", cp3_example},
      {"derived homology values for remark-s1s3, hopf-s7, trivial-s4-s1s3", derived_values},
      {"property suites", properties},
      {"round trip and byte-stable JSON", interface_stability},
  };
  bool all = true;
  int index = 1;
  for (const auto& [name, run] : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    o.require(seconds < 5.0, "took " + std::to_string(seconds) + " s");
    std::cout << "criterion " << index++ << ": " << (o.pass ? "PASS" : "FAIL") << "  " << name;
    if (!o.pass) std::cout << "  (" << o.detail << ")";
    std::cout << "\n";
    all = all && o.pass;
  }
  return all ? 0 : 1;
}
