#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <string>
#include <utility>
#include <vector>

namespace hashens {

enum class Provenance { original, poisoned };

struct DataPoint {
  std::vector<double> features;  // finite values only
  int label = 0;                 // 0 or 1
};

struct Dataset {
  std::vector<DataPoint> points;
  std::vector<std::string> feature_names;
  Provenance provenance = Provenance::original;

  // Bookkeeping for CSV round-trips: name of the label column and the two
  // raw label strings, in the order they were mapped to {0, 1}.
  std::string label_name = "label";
  std::array<std::string, 2> label_values{"0", "1"};

  std::size_t size() const { return points.size(); }
  std::size_t feature_count() const { return feature_names.size(); }

  // Number of points per class, indexed by label.
  std::array<std::size_t, 2> class_counts() const;
};

struct SplitSpec {
  double test_fraction = 0.2;
  uint64_t seed = 0;
  bool stratified = true;
};

// Reads a comma-separated file with a header row. The label column must hold
// exactly two distinct values, mapped to {0, 1} by lexicographic order of the
// raw strings. Row order is preserved. Feature cells must parse as finite
// numbers.
Dataset load_csv(const std::filesystem::path& path, const std::string& label_column);

// Same dialect as load_csv; labels are written as 0/1.
void save_csv(const Dataset& d, const std::filesystem::path& path);

// Subsamples the majority class (uniformly, without replacement) down to the
// minority cardinality. Surviving points keep their original order.
Dataset balance_classes(const Dataset& d, uint64_t seed);

// |test| = floor(test_fraction * |d|). With stratified=true the per-class
// test counts follow a largest-remainder allocation, so each stays within one
// of the exact per-class fraction.
std::pair<Dataset, Dataset> split_train_test(const Dataset& d, const SplitSpec& spec);

// Information gain of each feature against the binary label, in bits. A
// numeric feature is scored at the midpoint threshold (between consecutive
// distinct sorted values) that maximizes the gain.
std::vector<double> info_gain_values(const Dataset& d);

// The k highest-gain feature indices, descending by gain, ties broken by
// ascending index.
std::vector<std::size_t> info_gain_rank(const Dataset& d, std::size_t k);

// Projection onto the given feature indices (kept in the given order).
Dataset select_features(const Dataset& d, const std::vector<std::size_t>& indices);

}  // namespace hashens
