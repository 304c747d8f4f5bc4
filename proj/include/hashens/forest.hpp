#pragma once

#include <array>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <vector>

#include "hashens/dataset.hpp"

namespace hashens {

inline constexpr std::size_t kNoDepthLimit = std::numeric_limits<std::size_t>::max();
inline constexpr std::size_t kAutoFeaturesPerSplit = 0;

struct ForestConfig {
  std::size_t n_trees = 100;
  // 0 = auto: floor(log2(|f|)) + 1 features examined per split.
  std::size_t features_per_split = kAutoFeaturesPerSplit;
  std::size_t max_depth = kNoDepthLimit;
  std::size_t min_samples_leaf = 1;
  double bootstrap_fraction = 1.0;  // in (0, 1]
  // When false every tree sees the full training set (identity sample).
  bool bootstrap = true;
  uint64_t seed = 0;
};

struct TreeNode {
  int32_t feature = -1;  // -1 marks a leaf
  double threshold = 0.0;
  int32_t left = -1;
  int32_t right = -1;
  int label = 0;
  std::array<std::size_t, 2> class_counts{0, 0};

  bool is_leaf() const { return feature < 0; }
};

class DecisionTree {
 public:
  DecisionTree() = default;
  explicit DecisionTree(std::vector<TreeNode> nodes) : nodes_(std::move(nodes)) {}

  int predict(const std::vector<double>& features) const;
  int predict(const DataPoint& p) const { return predict(p.features); }

  const std::vector<TreeNode>& nodes() const { return nodes_; }
  std::size_t depth() const;

 private:
  std::vector<TreeNode> nodes_;  // node 0 is the root
};

struct RandomForest {
  std::vector<DecisionTree> trees;
  ForestConfig config;

  // Majority class over tree votes; exact ties go to class 0.
  int predict(const DataPoint& p) const;

  std::size_t feature_count_hint() const { return expected_features_; }
  std::size_t expected_features_ = 0;
};

// Greedy top-down induction: at every node features_per_split candidate
// features are sampled without replacement and the (feature, midpoint
// threshold) pair with maximal information gain splits the node. Stops on
// purity, zero gain, max_depth, or node size < 2 * min_samples_leaf.
DecisionTree train_tree(const Dataset& d, const ForestConfig& cfg, uint64_t tree_seed);

// n_trees trees, each on a seeded bootstrap sample of round(bootstrap_fraction
// * |d|) points drawn with replacement. Per-tree seeds are pre-derived from
// cfg.seed and the tree index, so the result never depends on scheduling.
RandomForest train_forest(const Dataset& d, const ForestConfig& cfg, std::size_t n_threads = 0);

// Percentage of correct predictions on test. Accepts anything with a
// predict(const DataPoint&) member or an int(const DataPoint&) callable.
template <class Predictor>
double accuracy(const Predictor& model, const Dataset& test) {
  if (test.size() == 0) throw std::invalid_argument("accuracy: empty test set");
  std::size_t correct = 0;
  for (const auto& p : test.points) {
    int got;
    if constexpr (std::is_invocable_r_v<int, const Predictor&, const DataPoint&>) {
      got = model(p);
    } else {
      got = model.predict(p);
    }
    if (got == p.label) ++correct;
  }
  return 100.0 * static_cast<double>(correct) / static_cast<double>(test.size());
}

// Debug dump of the full tree topology (thresholds, counts); format is
// documented in the README but not a stability guarantee.
std::string forest_to_json(const RandomForest& forest);

}  // namespace hashens
