#include "hnil/theorem_report.hpp"

#include "hnil/derivation.hpp"

#include <algorithm>

namespace hnil {

TheoremReport check_theorem(const BundleModel& b) {
  require_valid(b);
  TheoremReport r;
  r.n = fiber_degree_count(b);
  r.np = compute_n_lin(b);
  r.n_lin = r.np.n_lin;

  const DerivationHomology homology(b);
  r.hnil = nil_index(homology.lie_algebra());
  r.homology_dims = homology.dimensions();

  for (const auto& degree : r.np.degrees) {
    if (degree.witness && !degree.witness->substitution.is_identity()) r.witnesses.push_back(degree.witness->substitution);
  }
  r.lower_bound = std::max(0, r.n - r.n_lin);
  r.upper_bound = r.n;
  r.simply_connected_total = total_space_simply_connected(b);
  r.holds = r.lower_bound <= r.hnil && r.hnil <= r.upper_bound;
  return r;
}

}  // namespace hnil
