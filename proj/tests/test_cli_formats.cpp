#include "hnil/catalog.hpp"
#include "hnil/cli.hpp"
#include "hnil/errors.hpp"
#include "hnil/model_format.hpp"
#include "hnil/report.hpp"
#include "hnil/sweep.hpp"
#include "hnil/theorem_report.hpp"

#include <catch_amalgamated.hpp>
#include <nlohmann/json.hpp>

#include <cstdio>
#include <cstdlib>
#include <sstream>

using namespace hnil;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run cli(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = run_cli(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::vector<Diagnostic> diagnostics_of(const std::string& text) {
  try {
    parse_model(text);
  } catch (const ParseError& e) {
    return e.diagnostics();
  }
  return {};
}

const char* kRemark = R"(base {
  gen e : 2
  truncate 5
}
fiber {
  gen x : 1
  gen y : 3
  D x = e
  D y = e^2
}
)";

std::string sh(const std::string& command, int& status) {
  std::string out;
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buffer[4096];
  while (std::size_t n = std::fread(buffer, 1, sizeof buffer, pipe)) out.append(buffer, n);
  status = pclose(pipe);
  return out;
}

}  // namespace

TEST_CASE("parse_model examples") {
  const BundleModel b = parse_model(kRemark);
  CHECK(validate_bundle(b).empty());
  CHECK(b.fiber_size() == 2);
  CHECK(format_element(b.fiber_d_value(1)) == "e^2");

  auto d = diagnostics_of("base {\n gen e : 2\n truncate 5\n}\nfiber {\n gen x : 1\n D x = q\n}\n");
  REQUIRE(d.size() == 1);
  CHECK(d[0].message == "unknown generator q");
  CHECK(d[0].line == 7);

  d = diagnostics_of("base {\n gen e : 2\n truncate 5\n}\nfiber {\n gen y : 3\n D y = e\n}\n");
  REQUIRE(d.size() == 1);
  CHECK(d[0].message == "degree mismatch: expected 4, found 2");

  d = diagnostics_of("base {\n gen e : 2\n truncate 5\n}\nfiber {\n gen y : 3\n D y = 1/0*e^2\n}\n");
  REQUIRE(d.size() == 1);
  CHECK(d[0].message == "malformed rational: zero denominator");

  d = diagnostics_of("base {\n gen e : 2\n gen e : 2\n}\nfiber {\n}\n");
  REQUIRE(d.size() == 1);
  CHECK(d[0].message == "duplicate generator e");
  CHECK(d[0].line == 3);

  d = diagnostics_of("base {\n gen e : 2\n truncate 5\n}\nfiber {\n gen y : 3\n D y = y\n}\n");
  REQUIRE(d.size() == 1);
  CHECK(d[0].message == "D-value must use base generators only: y");
}

TEST_CASE("comments, semicolons and defaults") {
  const BundleModel b = parse_model("# header\nbase { gen e : 2; truncate 5 }\nfiber { gen y : 3 # no D\n}\n");
  CHECK(b.fiber_d_value(0).is_zero());
  CHECK(b.base().d_value(0).is_zero());
}

TEST_CASE("format_model round trip is a fixed point on the catalog") {
  for (const auto& e : catalog()) {
    INFO(e.name);
    const std::string once = format_model(parse_model(e.text));
    const std::string twice = format_model(parse_model(once));
    CHECK(once == twice);
    const BundleModel a = parse_model(e.text), b = parse_model(once);
    CHECK(a.fiber() == b.fiber());
    CHECK(a.fiber_d_values() == b.fiber_d_values());
    CHECK(*a.total_signature() == *b.total_signature());
  }
}

TEST_CASE("catalog contract") {
  const auto names = example_names();
  for (const char* required : {"remark-s1s3", "cp3-su-type", "hopf-s7", "trivial-s4-s1s3", "circle-any"}) {
    CHECK(std::find(names.begin(), names.end(), required) != names.end());
  }
  for (const auto& e : catalog()) CHECK(validate_bundle(parse_model(e.text)).empty());
  try {
    builtin_example("nope");
    FAIL("expected an error");
  } catch (const UnknownExampleError& e) {
    CHECK(std::string(e.what()).find("remark-s1s3") != std::string::npos);
  }
}

TEST_CASE("JSON report layout and stability") {
  const TheoremReport r = check_theorem(parse_model(builtin_example("hopf-s7")));
  const std::string text = emit_report(r, ReportFormat::json);
  CHECK(text == emit_report(check_theorem(parse_model(builtin_example("hopf-s7"))), ReportFormat::json));
  const auto j = nlohmann::ordered_json::parse(text);
  std::vector<std::string> keys;
  for (const auto& [k, v] : j.items()) keys.push_back(k);
  CHECK(keys == std::vector<std::string>{"n", "n_lin", "hnil", "lower_bound", "upper_bound", "holds", "homology",
                                         "witnesses", "note"});
  CHECK(text.rfind(R"({"n":1,"n_lin":1,"hnil":1,"lower_bound":0,"upper_bound":1,"holds":true,)", 0) == 0);
  CHECK(j["homology"].dump() == R"([{"degree":3,"dim":1}])");

  const auto empty = nlohmann::json::parse(emit_report(check_theorem(parse_model(builtin_example("empty-fiber"))),
                                                       ReportFormat::json));
  CHECK(empty["n"] == 0);
  CHECK(empty["hnil"] == 0);
  CHECK(empty["holds"] == true);

  const auto remark = nlohmann::json::parse(emit_report(check_theorem(parse_model(kRemark)), ReportFormat::json));
  REQUIRE(remark["witnesses"].size() == 1);
  const auto& w = remark["witnesses"][0];
  CHECK(w["correction"] == "e*x");
  for (const auto& k : w["kernel"]) CHECK(k.get<std::string>().find('/') != std::string::npos);
}

TEST_CASE("human report") {
  const std::string text = emit_report(check_theorem(parse_model(kRemark)), ReportFormat::human);
  CHECK(text.find("n - N(p) <= Hnil <= n : OK\n") != std::string::npos);
  CHECK(text.find("\x1b[") == std::string::npos);
}

TEST_CASE("run_cli exit codes") {
  CHECK(cli({"check", "-"}, kRemark).code == kExitOk);
  const Run json = cli({"check", "--json", "-"}, kRemark);
  CHECK(json.code == kExitOk);
  CHECK(nlohmann::json::parse(json.out)["holds"] == true);
  CHECK(json.out == cli({"check", "--json", "-"}, kRemark).out);

  const Run even = cli({"validate", "-"}, "base {\n gen e : 2\n truncate 6\n}\nfiber {\n gen v : 4\n}\n");
  CHECK(even.code == kExitInvalid);
  CHECK(even.out.find("fiber degree must be odd") != std::string::npos);

  const Run bad = cli({"check", "-"}, "base {\n gen e : 2\n}\nfiber {\n D x = q\n}\n");
  CHECK(bad.code == kExitInvalid);
  CHECK(bad.err.find("<stdin>:") != std::string::npos);

  CHECK(cli({"check", "/nonexistent/model.txt"}).code == kExitInvalid);
  CHECK(cli({}).code == kExitUsage);
  CHECK(cli({"frobnicate"}).code == kExitUsage);
  CHECK(cli({"cohomology", "-"}, kRemark).code == kExitUsage);
  CHECK(cli({"example", "nope"}).code == kExitUsage);
  CHECK(cli({"--help"}).code == kExitOk);

  const Run sp3 = cli({"check", "-"}, "base {\n gen u : 4\n truncate 13\n}\nfiber {\n gen a : 3\n gen b : 7\n gen c : 11\n}\n");
  CHECK(sp3.code == kExitViolated);
  CHECK(sp3.out.find(": VIOLATED") != std::string::npos);
}

TEST_CASE("run_cli subcommands") {
  const Run coh = cli({"cohomology", "-", "--degree", "4"}, kRemark);
  CHECK(coh.code == kExitOk);
  CHECK(coh.out == "dim H^4 = 1\n  [0] e^2\n");

  const Run classes = cli({"classes", "-"}, kRemark);
  CHECK(classes.out.find("alpha_y = [e^2]") != std::string::npos);

  const Run norm = cli({"normalize", "-"}, kRemark);
  CHECK(norm.code == kExitOk);
  CHECK(norm.out.rfind("# y' = y - e*x\n", 0) == 0);
  CHECK(validate_bundle(parse_model(norm.out)).empty());

  const Run np = cli({"np", "-"}, kRemark);
  CHECK(np.out.find("degree 1: injective") != std::string::npos);
  CHECK(np.out.find("n_lin = 1") != std::string::npos);

  const Run h = cli({"hnil", "-"}, builtin_example("trivial-s4-s1s3"));
  CHECK(h.out.find("hnil = 2") != std::string::npos);

  const Run list = cli({"list-examples"});
  CHECK(list.out.find("remark-s1s3") != std::string::npos);

  const Run s1 = cli({"sweep", "--count", "20", "--seed", "4"});
  const Run s2 = cli({"sweep", "--count", "20", "--seed", "4"});
  CHECK(s1.out == s2.out);
  CHECK(s1.out.find("checked 20 models") != std::string::npos);
}

TEST_CASE("example output pipes into check") {
  int status = 0;
  const std::string bin = HNIL_BINARY;
  const std::string out = sh("HNIL_COLOR=0 '" + bin + "' example remark-s1s3 | '" + bin + "' check -", status);
  CHECK(WIFEXITED(status));
  CHECK(WEXITSTATUS(status) == 0);
  CHECK(out.find("n - N(p) <= Hnil <= n : OK") != std::string::npos);

  const std::string a = sh("'" + bin + "' example cp3-su-type | '" + bin + "' check --json -", status);
  const std::string b = sh("'" + bin + "' example cp3-su-type | '" + bin + "' check --json -", status);
  CHECK(a == b);
  CHECK(!a.empty());
}
