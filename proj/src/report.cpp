#include "hnil/report.hpp"

#include <json.hpp>

namespace hnil {

const char* const kNLinNote =
    "n_lin counts injective degrees after triangular changes of generators; n_lin >= N(p), so "
    "lower_bound = max(0, n - n_lin) is a valid lower bound for Hnil";

namespace {

nlohmann::ordered_json witness_json(const DegreeVerdict& d) {
  const KillWitness& w = *d.witness;
  nlohmann::ordered_json j;
  j["degree"] = d.degree;
  j["target"] = w.substitution.target_name;
  j["new_generator"] = w.substitution.new_name;
  j["correction"] = format_element(w.substitution.correction);
  auto kernel = nlohmann::ordered_json::array();
  for (const auto& x : w.kernel) kernel.push_back(format_rational_pq(x));
  j["kernel"] = std::move(kernel);
  auto terms = nlohmann::ordered_json::array();
  for (const auto& t : w.module_terms) {
    nlohmann::ordered_json tj;
    tj["cohomology_degree"] = t.cohomology_degree;
    tj["cohomology_index"] = t.cohomology_index;
    tj["coefficient"] = format_rational_pq(t.coefficient);
    terms.push_back(std::move(tj));
  }
  j["module_terms"] = std::move(terms);
  j["phi"] = format_element(w.phi);
  return j;
}

std::string json_report(const TheoremReport& r) {
  nlohmann::ordered_json j;
  j["n"] = r.n;
  j["n_lin"] = r.n_lin;
  j["hnil"] = r.hnil;
  j["lower_bound"] = r.lower_bound;
  j["upper_bound"] = r.upper_bound;
  j["holds"] = r.holds;
  auto homology = nlohmann::ordered_json::array();
  for (const auto& [degree, dim] : r.homology_dims) {
    nlohmann::ordered_json h;
    h["degree"] = degree;
    h["dim"] = dim;
    homology.push_back(std::move(h));
  }
  j["homology"] = std::move(homology);
  auto witnesses = nlohmann::ordered_json::array();
  for (const auto& d : r.np.degrees) {
    if (d.witness && !d.witness->substitution.is_identity()) witnesses.push_back(witness_json(d));
  }
  j["witnesses"] = std::move(witnesses);
  j["note"] = kNLinNote;
  return j.dump() + "\n";
}

std::string describe_kill(const KillWitness& w) {
  if (w.substitution.is_identity()) return "D(" + w.substitution.target_name + ") = 0";
  return w.substitution.describe();
}

std::string human_report(const TheoremReport& r, bool styled) {
  std::string s;
  s += "n (distinct fiber degrees) : " + std::to_string(r.n) + "\n";
  s += "n_lin (injective degrees)  : " + std::to_string(r.n_lin) + "\n";
  for (const auto& d : r.np.degrees) {
    s += "  degree " + std::to_string(d.degree) + ": " +
         (d.verdict == Verdict::injective ? "injective" : "killable, " + describe_kill(*d.witness)) + "\n";
  }
  s += "Hnil                       : " + std::to_string(r.hnil) + "\n";
  s += "H_+(Der) dimensions        :";
  if (r.homology_dims.empty()) s += " none";
  for (const auto& [degree, dim] : r.homology_dims) {
    s += " H_" + std::to_string(degree) + "=" + std::to_string(dim);
  }
  s += "\n";
  s += "bounds                     : " + std::to_string(r.lower_bound) + " <= " + std::to_string(r.hnil) +
       " <= " + std::to_string(r.upper_bound) + "\n";
  s += std::string("total space simply connected: ") + (r.simply_connected_total ? "yes" : "no") + "\n";
  std::string verdict = r.holds ? "OK" : "VIOLATED";
  if (styled) verdict = (r.holds ? "\x1b[32m" : "\x1b[31m") + verdict + "\x1b[0m";
  s += "n - N(p) <= Hnil <= n : " + verdict + "\n";
  return s;
}

}  // namespace

std::string emit_report(const TheoremReport& r, ReportFormat format, bool styled) {
  return format == ReportFormat::json ? json_report(r) : human_report(r, styled);
}

}  // namespace hnil
