#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "hashens/dataset.hpp"
#include "hashens/forest.hpp"

namespace hashens {

enum class HashAlgorithm { md5 };

struct EnsembleConfig {
  std::size_t n_models = 1;  // N; odd values recommended (majority vote)
  HashAlgorithm hash_algorithm = HashAlgorithm::md5;
  ForestConfig forest_config;
};

struct PartitionAssignment {
  std::size_t n_sets = 0;
  std::vector<std::size_t> partition_of;     // point index -> hash partition in [0, N)
  std::vector<std::size_t> training_set_of;  // point index -> training set in [0, N)
};

struct EnsembleModel {
  std::vector<RandomForest> forests;
  PartitionAssignment assignment;
  EnsembleConfig config;

  int predict(const DataPoint& p) const;
};

// Concatenation of each feature's canonical decimal rendering, in order,
// without separators; the label is excluded. Integral values render without
// a decimal point, everything else in shortest round-trip form.
std::string serialize_point(const DataPoint& p);

std::array<unsigned char, 16> md5_digest(std::string_view data);
std::string md5_hex(std::string_view data);

// The 16-byte digest read as an unsigned big-endian integer, reduced mod n.
std::size_t digest_mod(const std::array<unsigned char, 16>& digest, std::size_t n);

std::size_t hash_partition_index(const DataPoint& p, std::size_t n,
                                 HashAlgorithm alg = HashAlgorithm::md5);

// Phase 1 buckets points by hash_partition_index. Phase 2 walks partitions in
// ascending index (points in dataset order within each) and deals them to
// training sets with one global counter, so set sizes differ by at most 1.
// No randomness is involved.
PartitionAssignment build_assignment(const Dataset& d, const EnsembleConfig& cfg);

// Training set i as a Dataset, points in original dataset order.
std::vector<Dataset> materialize_training_sets(const Dataset& d, const PartitionAssignment& a);

// Forest i is trained on training set i with seed derive_seed(
// forest_config.seed, kForestSeedStream, i); see pipeline.hpp for the stream
// constants.
EnsembleModel train_ensemble(const Dataset& d, const EnsembleConfig& cfg,
                             std::size_t n_threads = 0);

// One vote per forest, majority wins, exact ties go to class 0.
int predict_ensemble(const EnsembleModel& m, const DataPoint& p);

// Audit export: header plus one "point_index,partition,training_set" row per
// point.
void write_assignment_csv(const PartitionAssignment& a, std::ostream& out);

}  // namespace hashens
