#pragma once

#include "hnil/bundle_model.hpp"
#include "hnil/theorem_report.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace hnil {

struct RandomModel {
  std::string base_name;
  BundleModel model;
};

/// Draws a valid model: a base from a fixed pool of simply connected spaces,
/// one to three odd fiber generators of degree <= 7, and D-values that are
/// random small-coefficient combinations of base cocycles of the right degree.
/// Draws whose total space has H^1 != 0 are rejected and redrawn.
RandomModel random_model(std::mt19937_64& rng);

struct SweepEntry {
  std::size_t index = 0;
  std::string base_name;
  std::string fiber;  // "x1:1 x2:3"
  TheoremReport report;
};

/// Runs check_theorem on `count` random models drawn from the given seed.
std::vector<SweepEntry> run_sweep(std::size_t count, std::uint64_t seed);

std::string format_sweep_entry(const SweepEntry& e);

}  // namespace hnil
