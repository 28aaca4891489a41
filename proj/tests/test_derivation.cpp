#include "hnil/catalog.hpp"
#include "hnil/derivation.hpp"
#include "hnil/errors.hpp"
#include "hnil/model_format.hpp"

#include <catch_amalgamated.hpp>

#include <random>

using namespace hnil;

namespace {

BundleModel example(std::string_view name) { return parse_model(builtin_example(name)); }

std::vector<BundleModel> catalog_models() {
  std::vector<BundleModel> out;
  for (const auto& e : catalog()) out.push_back(parse_model(e.text));
  return out;
}

// Derivation of degree p sending fiber generator `v` to `value` (parsed in the
// total signature) and every other generator to zero.
Derivation send(const BundleModel& b, int p, std::string_view v, std::string_view value) {
  Derivation t(b, p);
  const std::size_t i = b.total_signature()->index_of(v) - b.total_index(0);
  t.set_value(i, parse_expression(value, b.total_signature()));
  return t;
}

Element el(const BundleModel& b, std::string_view text) { return parse_expression(text, b.total_signature()); }

Rational koszul(int a, int b) { return (a * b) % 2 ? -1 : 1; }

// Largest q such that some left-nested q-fold bracket of basis elements is
// nonzero, found by enumerating all nested brackets.
int brute_force_nil(const GradedLieAlgebra& lie) {
  const std::size_t n = lie.dimension();
  if (n == 0) return 0;
  std::vector<Vector> level;
  for (std::size_t i = 0; i < n; ++i) level.push_back(lie.unit_vector(i));
  int q = 1;
  for (;;) {
    std::vector<Vector> next;
    for (const auto& x : level)
      for (std::size_t i = 0; i < n; ++i) {
        Vector y = lie.bracket(x, lie.unit_vector(i));
        if (!is_zero(y)) next.push_back(std::move(y));
      }
    if (next.empty()) return q;
    ++q;
    level = std::move(next);
  }
}

}  // namespace

TEST_CASE("derivation_space_basis examples") {
  const BundleModel remark = example("remark-s1s3");
  const auto d3 = derivation_space_basis(remark, 3);
  REQUIRE(d3.size() == 1);
  CHECK(d3[0].describe() == "y -> 1");
  const auto d2 = derivation_space_basis(remark, 2);
  REQUIRE(d2.size() == 1);
  CHECK(d2[0].describe() == "y -> x");
  CHECK(derivation_space_basis(example("hopf-s7"), 1).empty());
}

TEST_CASE("apply_derivation examples") {
  const BundleModel remark = example("remark-s1s3");
  CHECK(apply_derivation(send(remark, 2, "y", "x"), el(remark, "x*y")).is_zero());
  CHECK(apply_derivation(send(remark, 1, "x", "1"), el(remark, "x*y")) == el(remark, "y"));
  CHECK(apply_derivation(send(remark, 1, "x", "1"), el(remark, "e^2")).is_zero());
  CHECK(apply_derivation(send(remark, 2, "y", "x"), el(remark, "e^2")).is_zero());
}

TEST_CASE("differential examples") {
  const BundleModel remark = example("remark-s1s3");
  CHECK(differential(remark, send(remark, 2, "y", "x")) == send(remark, 1, "y", "e"));
  CHECK(differential(remark, send(remark, 1, "x", "1")).is_zero());
  const BundleModel hopf = example("hopf-s7");
  CHECK(differential(hopf, send(hopf, 3, "y", "1")).is_zero());
  CHECK(differential(hopf, send(hopf, 3, "y", "1")).degree() == 2);
}

TEST_CASE("bracket examples") {
  const BundleModel trivial = parse_model("base {\n gen u : 4\n truncate 5\n}\nfiber {\n gen x : 1\n gen y : 3\n}\n");
  const Derivation yx = send(trivial, 2, "y", "x"), x1 = send(trivial, 1, "x", "1");
  const Derivation b = bracket(yx, x1);
  CHECK(b.degree() == 3);
  CHECK(b == Rational(-1) * send(trivial, 3, "y", "1"));
  CHECK(bracket(x1, x1).is_zero());
  CHECK(bracket(yx, yx).is_zero());
}

TEST_CASE("homology_lie examples") {
  const DerivationHomology remark(example("remark-s1s3"));
  CHECK(remark.dimensions() == std::vector<std::pair<int, std::size_t>>{{1, 1}, {3, 1}});
  CHECK(remark.lie_algebra().structure_constants().empty());
  CHECK(remark.representatives(1)[0].describe() == "x -> 1");
  CHECK(remark.representatives(3)[0].describe() == "y -> 1");
  // y -> e is the boundary of y -> x
  const BundleModel rm = example("remark-s1s3");
  CHECK(is_zero(remark.class_coordinates(send(rm, 1, "y", "e"))));

  const DerivationHomology trivial(example("trivial-s4-s1s3"));
  CHECK(trivial.dimensions() == std::vector<std::pair<int, std::size_t>>{{1, 1}, {2, 1}, {3, 1}});
  const auto& lie = trivial.lie_algebra();
  REQUIRE(lie.structure_constants().size() == 2);
  const std::size_t g1 = trivial.global_index(1, 0), g2 = trivial.global_index(2, 0), g3 = trivial.global_index(3, 0);
  Vector minus3(lie.dimension(), 0);
  minus3[g3] = -1;
  CHECK(lie.bracket_basis(g2, g1) == minus3);
  Vector plus3 = minus3;
  plus3[g3] = 1;
  CHECK(lie.bracket_basis(g1, g2) == plus3);
  CHECK(nil_index(lie) == 2);

  const DerivationHomology hopf(example("hopf-s7"));
  CHECK(hopf.dimensions() == std::vector<std::pair<int, std::size_t>>{{3, 1}});
  CHECK(nil_index(hopf.lie_algebra()) == 1);
}

TEST_CASE("nil_index examples") {
  CHECK(nil_index(GradedLieAlgebra{}) == 0);
  GradedLieAlgebra abelian({{"a", 1}, {"b", 2}});
  CHECK(nil_index(abelian) == 1);
  GradedLieAlgebra heisenberg({{"a", 2}, {"b", 2}, {"c", 4}});
  heisenberg.set_bracket(0, 1, {0, 0, 1});
  heisenberg.set_bracket(1, 0, {0, 0, -1});
  CHECK(heisenberg.validate().empty());
  CHECK(nil_index(heisenberg) == 2);
}

TEST_CASE("hnil examples") {
  for (const char* name : {"circle-any", "circle-s2", "circle-s2xs2", "circle-trivial"}) CHECK(hnil::hnil(example(name)) == 1);
  CHECK(hnil::hnil(example("trivial-s4-s1s3")) == 2);
  CHECK(hnil::hnil(example("remark-s1s3")) == 1);
  CHECK(hnil::hnil(example("empty-fiber")) == 0);
}

TEST_CASE("DGL identities on catalog models") {
  std::mt19937 rng(23);
  for (const BundleModel& b : catalog_models()) {
    const int top = b.max_fiber_degree();
    std::vector<Derivation> all;
    for (int p = 1; p <= top; ++p) {
      for (const auto& t : derivation_space_basis(b, p)) {
        CHECK(differential(b, differential(b, t)).is_zero());
        all.push_back(t);
      }
    }
    for (const auto& t1 : all)
      for (const auto& t2 : all) {
        const int p1 = t1.degree(), p2 = t2.degree();
        const Derivation lhs = differential(b, bracket(t1, t2));
        const Derivation rhs =
            bracket(differential(b, t1), t2) + koszul(p1, 1) * bracket(t1, differential(b, t2));
        CHECK(lhs == rhs);
        CHECK(bracket(t1, t2) == Rational(-1) * koszul(p1, p2) * bracket(t2, t1));
      }
    if (all.empty()) continue;
    for (int trial = 0; trial < 200; ++trial) {
      const auto& t1 = all[rng() % all.size()];
      const auto& t2 = all[rng() % all.size()];
      const auto& t3 = all[rng() % all.size()];
      const Derivation lhs = bracket(t1, bracket(t2, t3));
      const Derivation rhs =
          bracket(bracket(t1, t2), t3) + koszul(t1.degree(), t2.degree()) * bracket(t2, bracket(t1, t3));
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("homology bracket is representative independent") {
  std::mt19937 rng(29);
  for (const BundleModel& b : catalog_models()) {
    const DerivationHomology h(b);
    CHECK(h.lie_algebra().validate().empty());
    for (int p1 = 1; p1 <= h.max_degree(); ++p1)
      for (int p2 = 1; p1 + p2 <= h.max_degree(); ++p2) {
        const auto reps1 = h.representatives(p1), reps2 = h.representatives(p2);
        const auto& above = h.basis(p1 + 1);
        for (const auto& z1 : reps1)
          for (const auto& z2 : reps2) {
            const Derivation base_bracket = bracket(z1, z2);
            CHECK(differential(b, base_bracket).is_zero());
            Vector xi(above.size());
            for (auto& c : xi) c = static_cast<int>(rng() % 5) - 2;
            const Derivation moved = z1 + differential(b, above.from_coordinates(xi));
            CHECK(h.class_coordinates(bracket(moved, z2)) == h.class_coordinates(base_bracket));
          }
      }
  }
}

TEST_CASE("nil_index agrees with brute-force nested brackets on the catalog") {
  for (const BundleModel& b : catalog_models()) {
    const DerivationHomology h(b);
    CHECK(nil_index(h.lie_algebra()) == brute_force_nil(h.lie_algebra()));
  }
}

TEST_CASE("nested theta_{j,i} brackets on a model with D = 0") {
  const BundleModel b = example("proof-s2-su4");
  const DerivationHomology h(b);
  const Derivation t10 = send(b, 3, "v1", "1");
  const Derivation t21 = send(b, 2, "v2", "v1");
  const Derivation t32 = send(b, 2, "v3", "v2");
  for (const auto* t : {&t10, &t21, &t32}) {
    CHECK(differential(b, *t).is_zero());
    CHECK_FALSE(is_zero(h.class_coordinates(*t)));
  }
  const Derivation t31 = bracket(t32, t21);
  CHECK((t31 == send(b, 4, "v3", "v1") || t31 == Rational(-1) * send(b, 4, "v3", "v1")));
  const Derivation t30 = bracket(t31, t10);
  CHECK((t30 == send(b, 7, "v3", "1") || t30 == Rational(-1) * send(b, 7, "v3", "1")));
  CHECK_FALSE(is_zero(h.class_coordinates(t30)));
  CHECK(hnil::hnil(b) >= 3);
}
