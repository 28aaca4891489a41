#include "hnil/catalog.hpp"

namespace hnil {

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = {
      {"remark-s1s3", "S^1 x S^3 fibration over (Λe,0) with Dx = e, Dy = e^2",
       R"(# S^1 x S^3 fibration over the model (Λe, 0)
base {
  gen e : 2
  truncate 5
}
fiber {
  gen x : 1
  gen y : 3
  D x = e
  D y = e^2
}
)"},
      {"cp3-su-type", "CP^3 base, fiber degrees 3 and 5 with Dy3 = a^2, Dy5 = a^3",
       R"(# principal bundle over CP^3 with rational fiber S^3 x S^5
base {
  gen a : 2
  gen z : 7
  truncate 8
  d z = a^4
}
fiber {
  gen y3 : 3
  gen y5 : 5
  D y3 = a^2
  D y5 = a^3
}
)"},
      {"cp3-u3-type", "CP^3 base, fiber degrees 1, 3, 5 with Dx = a, Dy = a^2, Dz = a^3",
       R"(# principal bundle over CP^3 with rational fiber S^1 x S^3 x S^5
base {
  gen a : 2
  gen z : 7
  truncate 8
  d z = a^4
}
fiber {
  gen x : 1
  gen y : 3
  gen w : 5
  D x = a
  D y = a^2
  D w = a^3
}
)"},
      {"hp2-sp2-type", "HP^2 base, fiber degrees 3 and 7 with Dy3 = u, Dy7 = u^2",
       R"(# principal bundle over HP^2 with rational fiber S^3 x S^7
base {
  gen u : 4
  gen z : 11
  truncate 12
  d z = u^3
}
fiber {
  gen y3 : 3
  gen y7 : 7
  D y3 = u
  D y7 = u^2
}
)"},
      {"hopf-s7", "S^3 -> S^7 -> S^4: base Λu (u in degree 4), Dy = u",
       R"(# quaternionic Hopf fibration over S^4
base {
  gen u : 4
  truncate 5
}
fiber {
  gen y : 3
  D y = u
}
)"},
      {"trivial-s4-s1s3", "trivial bundle over S^4 with fiber S^1 x S^3",
       R"(# trivial bundle over S^4
base {
  gen u : 4
  truncate 5
}
fiber {
  gen x : 1
  gen y : 3
}
)"},
      {"trivial-s4-s3", "trivial bundle over S^4 with fiber S^3",
       R"(# trivial bundle over S^4
base {
  gen u : 4
  truncate 5
}
fiber {
  gen y : 3
}
)"},
      {"trivial-s4-su4", "trivial bundle over S^4 with fiber of type SU(4)",
       R"(# trivial bundle over S^4, fiber degrees 3, 5, 7
base {
  gen u : 4
  truncate 9
}
fiber {
  gen y : 3
  gen w : 5
  gen t : 7
}
)"},
      {"proof-s2-su4", "trivial bundle over S^2 with fiber of type SU(4)",
       R"(# trivial bundle over S^2 (minimal model Λ(a, z), dz = a^2)
base {
  gen a : 2
  gen z : 3
  truncate 9
  d z = a^2
}
fiber {
  gen v1 : 3
  gen v2 : 5
  gen v3 : 7
}
)"},
      {"circle-any", "circle bundle S^5 -> CP^2 with Dv = a",
       R"(# circle bundle over CP^2
base {
  gen a : 2
  gen z : 5
  truncate 6
  d z = a^3
}
fiber {
  gen v : 1
  D v = a
}
)"},
      {"circle-s2", "circle bundle over S^2 with Dv = 2a",
       R"(# circle bundle over S^2 of Euler class 2
base {
  gen a : 2
  gen z : 3
  truncate 4
  d z = a^2
}
fiber {
  gen v : 1
  D v = 2*a
}
)"},
      {"circle-s2xs2", "circle bundle over S^2 x S^2 with Dv = a - b",
       R"(# circle bundle over S^2 x S^2
base {
  gen a : 2
  gen b : 2
  gen z : 3
  gen t : 3
  truncate 4
  d z = a^2
  d t = b^2
}
fiber {
  gen v : 1
  D v = a - b
}
)"},
      {"circle-trivial", "trivial circle bundle over S^4",
       R"(# trivial circle bundle over S^4
base {
  gen u : 4
  truncate 5
}
fiber {
  gen v : 1
}
)"},
      {"empty-fiber", "bundle with trivial group: no fiber generators",
       R"(# no fiber generators
base {
  gen u : 4
  truncate 5
}
fiber {
}
)"},
  };
  return entries;
}

std::vector<std::string> example_names() {
  std::vector<std::string> names;
  for (const auto& e : catalog()) names.push_back(e.name);
  return names;
}

std::string builtin_example(std::string_view name) {
  for (const auto& e : catalog()) {
    if (e.name == name) return e.text;
  }
  std::string list;
  for (const auto& e : catalog()) list += (list.empty() ? "" : ", ") + e.name;
  throw UnknownExampleError("unknown example '" + std::string(name) + "'; available: " + list);
}

}  // namespace hnil
