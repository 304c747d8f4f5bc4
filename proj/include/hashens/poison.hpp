#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hashens/dataset.hpp"

namespace hashens {

enum class PerturbationKind { zeroing, noising, out_of_ranging, label_flipping };

// Exact strings used in CLI flags, config files and report columns.
std::string to_string(PerturbationKind kind);
PerturbationKind perturbation_from_string(const std::string& name);

struct PoisonSpec {
  PerturbationKind kind = PerturbationKind::label_flipping;
  double epsilon_points = 0.0;    // percentage of points in [0, 100]
  double epsilon_features = 0.0;  // percentage of features in [0, 100]; ignored for label flipping
  uint64_t seed = 0;
};

struct TargetSelection {
  std::vector<std::size_t> point_indices;    // sorted ascending
  std::vector<std::size_t> feature_indices;  // sorted ascending
};

// floor(x + 0.5); used for all epsilon-to-count conversions.
std::size_t round_half_up(double x);

// Uniform sampling without replacement driven solely by spec.seed. The
// perturbation kind never enters the RNG stream, so the same seed yields the
// same selection for every kind.
TargetSelection select_targets(std::size_t n_points, std::size_t n_features, const PoisonSpec& spec);

// Selected cells become 0. Requires an original (not already poisoned) input.
Dataset apply_zeroing(const Dataset& d, const TargetSelection& t);

// Selected cells are redrawn uniformly from [min, max] of the same feature
// over the opposite class, ranges taken from the input dataset.
Dataset apply_noising(const Dataset& d, const TargetSelection& t, uint64_t seed);

// Selected cells move outside the feature's observed range: (min - 1) on
// heads, (max + 1) on tails, one coin per cell.
Dataset apply_out_of_ranging(const Dataset& d, const TargetSelection& t, uint64_t seed);

// Labels of selected points flip 0 <-> 1; features and feature_indices are
// untouched.
Dataset apply_label_flipping(const Dataset& d, const TargetSelection& t);

// select_targets + the kind-appropriate apply_*.
Dataset poison_dataset(const Dataset& d, const PoisonSpec& spec);

}  // namespace hashens
