#include "hnil/sweep.hpp"

#include "hnil/model_format.hpp"

#include <algorithm>

namespace hnil {

namespace {

struct BaseSpec {
  const char* name;
  const char* body;  // base block statements without truncate
  int min_truncation;
};

const BaseSpec kBases[] = {
    {"S2", "gen a : 2\nd z = a^2\ngen z : 3\n", 4},
    {"S4", "gen u : 4\n", 5},
    {"CP2", "gen a : 2\ngen z : 5\nd z = a^3\n", 6},
    {"CP3", "gen a : 2\ngen z : 7\nd z = a^4\n", 8},
    {"S2xS2", "gen a : 2\ngen b : 2\ngen z : 3\ngen t : 3\nd z = a^2\nd t = b^2\n", 4},
    {"S2xS4", "gen a : 2\ngen u : 4\ngen z : 3\nd z = a^2\n", 6},
    {"HP2", "gen u : 4\ngen z : 11\nd z = u^3\n", 9},
    {"S3xS3", "gen g : 3\ngen h : 3\n", 6},
    {"S6", "gen w : 6\ngen z : 11\nd z = w^2\n", 8},
};

std::size_t draw(std::mt19937_64& rng, std::size_t bound) { return static_cast<std::size_t>(rng() % bound); }

Cdga make_base(const BaseSpec& spec, int truncation) {
  const std::string text =
      std::string("base {\n") + spec.body + "truncate " + std::to_string(truncation) + "\n}\nfiber {\n}\n";
  return parse_model(text).base();
}

}  // namespace

namespace {

RandomModel draw_model(std::mt19937_64& rng) {
  const BaseSpec& spec = kBases[draw(rng, std::size(kBases))];

  const std::size_t fiber_count = 1 + draw(rng, 3);
  std::vector<GeneratorSymbol> fiber;
  int max_degree = 0;
  for (std::size_t i = 0; i < fiber_count; ++i) {
    const int degree = 1 + 2 * static_cast<int>(draw(rng, 4));
    fiber.push_back({"x" + std::to_string(i + 1), degree, Origin::fiber});
    max_degree = std::max(max_degree, degree);
  }

  const Cdga base = make_base(spec, std::max(spec.min_truncation, max_degree + 2));
  const auto& sig = base.signature();
  std::vector<Element> d_values;
  for (const auto& g : fiber) {
    const auto monomials = sig->degree_basis(g.degree + 1);
    Element value(sig);
    for (const auto& z : kernel_basis(base.differential_matrix(g.degree + 1))) {
      const int c = static_cast<int>(draw(rng, 5)) - 2;
      if (c != 0) value += Rational(c) * Element::from_coordinates(sig, monomials, z);
    }
    d_values.push_back(std::move(value));
  }
  return {spec.name, BundleModel(base, std::move(fiber), std::move(d_values))};
}

}  // namespace

RandomModel random_model(std::mt19937_64& rng) {
  for (;;) {
    RandomModel m = draw_model(rng);
    if (total_space_simply_connected(m.model)) return m;
  }
}

std::vector<SweepEntry> run_sweep(std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<SweepEntry> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    RandomModel m = random_model(rng);
    SweepEntry e;
    e.index = i;
    e.base_name = m.base_name;
    for (const auto& g : m.model.fiber()) {
      if (!e.fiber.empty()) e.fiber += ' ';
      e.fiber += g.name + ":" + std::to_string(g.degree);
    }
    e.report = check_theorem(m.model);
    out.push_back(std::move(e));
  }
  return out;
}

std::string format_sweep_entry(const SweepEntry& e) {
  const auto& r = e.report;
  return "#" + std::to_string(e.index) + " base=" + e.base_name + " fiber=[" + e.fiber + "] n=" + std::to_string(r.n) +
         " n_lin=" + std::to_string(r.n_lin) + " hnil=" + std::to_string(r.hnil) + " bounds=[" +
         std::to_string(r.lower_bound) + "," + std::to_string(r.upper_bound) + "] " + (r.holds ? "OK" : "VIOLATED");
}

}  // namespace hnil
