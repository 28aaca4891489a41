#pragma once

#include "hnil/bundle_model.hpp"

#include <string>
#include <utility>
#include <vector>

namespace hnil {

/// All invariants of one bundle model and the verdict on
/// n - N_lin <= Hnil <= n. Since N_lin >= N(p), the lower bound reported here
/// is never stronger than the true one.
struct TheoremReport {
  int n = 0;
  int n_lin = 0;
  int hnil = 0;
  int lower_bound = 0;  // max(0, n - n_lin)
  int upper_bound = 0;  // n
  bool holds = false;
  bool simply_connected_total = false;
  std::vector<std::pair<int, std::size_t>> homology_dims;
  std::vector<GeneratorSubstitution> witnesses;
  NpReport np;
};

/// Throws ValidationError for invalid models.
TheoremReport check_theorem(const BundleModel& b);

}  // namespace hnil
