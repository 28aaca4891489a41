#include "hnil/cli.hpp"

#include "hnil/bundle_model.hpp"
#include "hnil/catalog.hpp"
#include "hnil/derivation.hpp"
#include "hnil/model_format.hpp"
#include "hnil/report.hpp"
#include "hnil/sweep.hpp"
#include "hnil/theorem_report.hpp"

#include <CLI11.hpp>

#include <unistd.h>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

namespace hnil {

namespace {

/// Raised for problems reading the input, reported with exit code 1.
struct InputError {
  std::string message;
};

std::string read_source(const std::string& path, std::istream& in) {
  std::ostringstream buffer;
  if (path == "-") {
    buffer << in.rdbuf();
  } else {
    std::ifstream file(path);
    if (!file) throw InputError{"cannot open " + path};
    buffer << file.rdbuf();
  }
  return buffer.str();
}

BundleModel load(const std::string& path, std::istream& in) {
  const std::string text = read_source(path, in);
  try {
    return parse_model(text);
  } catch (const ParseError& e) {
    std::string message;
    for (const auto& d : e.diagnostics()) {
      if (!message.empty()) message += '\n';
      message += (path == "-" ? std::string("<stdin>") : path) + ":" + d.to_string();
    }
    throw InputError{message};
  }
}

BundleModel load_valid(const std::string& path, std::istream& in) {
  BundleModel b = load(path, in);
  const auto violations = validate_bundle(b);
  if (!violations.empty()) {
    std::string message = "invalid model:";
    for (const auto& v : violations) message += "\n  " + v.to_string();
    throw InputError{message};
  }
  return b;
}

bool styled_output(const std::ostream& out) {
  const char* env = std::getenv("HNIL_COLOR");
  if (env && std::string(env) == "0") return false;
  return &out == &std::cout && isatty(STDOUT_FILENO);
}

std::string format_class(const CohomologyClass& c) {
  std::string s = "(";
  for (std::size_t i = 0; i < c.coordinates.size(); ++i) {
    if (i) s += ", ";
    s += format_rational(c.coordinates[i]);
  }
  return s + ")";
}

int cmd_validate(const std::string& file, std::istream& in, std::ostream& out) {
  const BundleModel b = load(file, in);
  const auto violations = validate_bundle(b);
  if (violations.empty()) {
    out << "valid\n";
    return kExitOk;
  }
  for (const auto& v : violations) out << "violation: " << v.to_string() << "\n";
  return kExitInvalid;
}

int cmd_cohomology(const std::string& file, int degree, std::istream& in, std::ostream& out) {
  const BundleModel b = load_valid(file, in);
  const CohomologyBasis h = b.base().cohomology_basis(degree);
  out << "dim H^" << degree << " = " << h.dimension << "\n";
  for (std::size_t i = 0; i < h.representatives.size(); ++i) {
    out << "  [" << i << "] " << format_element(h.representatives[i]) << "\n";
  }
  return kExitOk;
}

int cmd_classes(const std::string& file, std::istream& in, std::ostream& out) {
  const BundleModel b = load_valid(file, in);
  const auto classes = characteristic_classes(b);
  for (std::size_t i = 0; i < b.fiber_size(); ++i) {
    const auto& g = b.fiber_generator(i);
    out << "alpha_" << g.name << " = [" << format_element(b.fiber_d_value(i)) << "] in H^" << g.degree + 1
        << " coordinates " << format_class(classes[i]) << (classes[i].is_zero() ? " zero" : " nonzero") << "\n";
  }
  return kExitOk;
}

int cmd_normalize(const std::string& file, std::istream& in, std::ostream& out) {
  const BundleModel b = load_valid(file, in);
  const Normalization n = normalize_generators(b);
  if (n.substitutions.empty()) out << "# no substitutions\n";
  for (const auto& s : n.substitutions) out << "# " << s.describe() << "\n";
  out << format_model(n.normalized);
  return kExitOk;
}

int cmd_np(const std::string& file, std::istream& in, std::ostream& out) {
  const BundleModel b = load_valid(file, in);
  const NpReport r = compute_n_lin(b);
  for (const auto& d : r.degrees) {
    out << "degree " << d.degree << ": ";
    if (d.verdict == Verdict::injective) {
      out << "injective\n";
    } else {
      const auto& sub = d.witness->substitution;
      out << "killable, " << (sub.is_identity() ? "D(" + sub.target_name + ") = 0" : sub.describe()) << ", phi = " << format_element(d.witness->phi)
          << "\n";
    }
  }
  out << "n = " << r.n << "\nn_lin = " << r.n_lin << "\n";
  return kExitOk;
}

int cmd_hnil(const std::string& file, std::istream& in, std::ostream& out) {
  const BundleModel b = load_valid(file, in);
  const DerivationHomology h(b);
  const GradedLieAlgebra& lie = h.lie_algebra();
  for (int p = 1; p <= h.max_degree(); ++p) {
    const auto reps = h.representatives(p);
    for (std::size_t i = 0; i < reps.size(); ++i) {
      out << lie.basis()[h.global_index(p, i)].label << " (degree " << p << "): [" << reps[i].describe() << "]\n";
    }
  }
  for (const auto& [ij, value] : lie.structure_constants()) {
    out << "[" << lie.basis()[ij.first].label << ", " << lie.basis()[ij.second].label << "] =";
    for (std::size_t k = 0; k < value.size(); ++k) {
      if (value[k] != 0) out << " " << format_rational(value[k]) << "*" << lie.basis()[k].label;
    }
    out << "\n";
  }
  out << "hnil = " << nil_index(lie) << "\n";
  return kExitOk;
}

int cmd_check(const std::string& file, bool json, std::istream& in, std::ostream& out) {
  const BundleModel b = load_valid(file, in);
  const TheoremReport r = check_theorem(b);
  out << emit_report(r, json ? ReportFormat::json : ReportFormat::human, !json && styled_output(out));
  return r.holds ? kExitOk : kExitViolated;
}

int cmd_sweep(std::size_t count, std::uint64_t seed, std::ostream& out) {
  std::size_t violated = 0;
  for (const auto& e : run_sweep(count, seed)) {
    out << format_sweep_entry(e) << "\n";
    if (!e.report.holds) ++violated;
  }
  out << "checked " << count << " models, " << violated << " violations\n";
  return violated == 0 ? kExitOk : kExitViolated;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Rational homotopical nilpotency of principal bundle models", "hnil"};
  app.require_subcommand(1);

  std::string file;
  int degree = 0;
  bool json = false;
  std::string example_name;
  std::size_t count = 200;
  std::uint64_t seed = 1;

  auto* validate = app.add_subcommand("validate", "check a model file for violations");
  validate->add_option("FILE", file, "model file, or - for stdin")->required();
  auto* cohomology = app.add_subcommand("cohomology", "cohomology basis of the base in one degree");
  cohomology->add_option("FILE", file, "model file, or - for stdin")->required();
  cohomology->add_option("--degree,-k", degree, "degree K")->required();
  auto* classes = app.add_subcommand("classes", "characteristic classes of the fiber generators");
  classes->add_option("FILE", file, "model file, or - for stdin")->required();
  auto* normalize = app.add_subcommand("normalize", "substitute generators to kill characteristic classes");
  normalize->add_option("FILE", file, "model file, or - for stdin")->required();
  auto* np = app.add_subcommand("np", "per-degree verdicts and n_lin");
  np->add_option("FILE", file, "model file, or - for stdin")->required();
  auto* hnil_cmd = app.add_subcommand("hnil", "homology Lie algebra of derivations and its nilpotency index");
  hnil_cmd->add_option("FILE", file, "model file, or - for stdin")->required();
  auto* check = app.add_subcommand("check", "check n - N(p) <= Hnil <= n");
  check->add_option("FILE", file, "model file, or - for stdin")->required();
  check->add_flag("--json", json, "emit JSON");
  auto* example = app.add_subcommand("example", "print a builtin model");
  example->add_option("NAME", example_name, "catalog name")->required();
  auto* list = app.add_subcommand("list-examples", "list builtin models");
  auto* sweep = app.add_subcommand("sweep", "check the theorem on random valid models");
  sweep->add_option("--count,-n", count, "number of models")->default_val(200);
  sweep->add_option("--seed,-s", seed, "random seed")->default_val(1);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*validate) return cmd_validate(file, in, out);
    if (*cohomology) return cmd_cohomology(file, degree, in, out);
    if (*classes) return cmd_classes(file, in, out);
    if (*normalize) return cmd_normalize(file, in, out);
    if (*np) return cmd_np(file, in, out);
    if (*hnil_cmd) return cmd_hnil(file, in, out);
    if (*check) return cmd_check(file, json, in, out);
    if (*example) {
      out << builtin_example(example_name);
      return kExitOk;
    }
    if (*list) {
      for (const auto& e : catalog()) out << e.name << "  " << e.summary << "\n";
      return kExitOk;
    }
    if (*sweep) return cmd_sweep(count, seed, out);
  } catch (const InputError& e) {
    err << e.message << "\n";
    return kExitInvalid;
  } catch (const UnknownExampleError& e) {
    err << e.what() << "\n";
    return kExitUsage;
  } catch (const InvariantError& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitViolated;
  } catch (const Error& e) {
    err << e.what() << "\n";
    return kExitInvalid;
  }
  return kExitUsage;
}

}  // namespace hnil
