#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hashens/dataset.hpp"
#include "hashens/ensemble.hpp"
#include "hashens/poison.hpp"
#include "hashens/rng.hpp"

namespace hashens {

// Seed derivation streams. Everything random in an experiment flows from one
// master seed:
//   split seed            = derive_seed(master, kSplitSeedStream)
//   repetition seed r     = derive_seed(master, kRepetitionSeedStream, r)
//   poison seed (rep r)   = derive_seed(rep_seed, kPoisonSeedStream)
//   training seed (rep r) = derive_seed(rep_seed, kTrainSeedStream)
//   forest i seed         = derive_seed(training seed, kForestSeedStream, i)
//   tree t seed           = derive_seed(forest seed, kTreeSeedStream, t)
inline constexpr uint64_t kSplitSeedStream = 1;
inline constexpr uint64_t kRepetitionSeedStream = 2;
inline constexpr uint64_t kPoisonSeedStream = 3;
inline constexpr uint64_t kTrainSeedStream = 4;
inline constexpr uint64_t kForestSeedStream = 5;
inline constexpr uint64_t kTreeSeedStream = 6;
inline constexpr uint64_t kSubsampleSeedStream = 7;

inline constexpr uint64_t kDefaultMasterSeed = 42;

struct ExperimentConfig {
  std::filesystem::path dataset_path;
  SplitSpec split;        // seed filled from master_seed by resolve() unless set
  PoisonSpec poison;      // seed is derived per repetition
  EnsembleConfig ensemble;
  std::size_t repetitions = 5;
  bool meter_resources = true;
  uint64_t master_seed = kDefaultMasterSeed;
  // Re-randomize the train/test split on every repetition instead of fixing
  // it once per experiment (sensitivity checks only).
  bool resplit_per_repetition = false;
  // Sustainability axes: percentage of points / features retained before the
  // split (100 = full dataset).
  double dataset_fraction = 100.0;
  double feature_fraction = 100.0;
};

struct StepMetrics {
  double wall_seconds = 0.0;
  std::optional<double> cpu_user_seconds;
  std::optional<uint64_t> peak_memory_bytes;
};

// Wall clock always; CPU user time and peak RSS best-effort from getrusage,
// left unset (not zero) when the facility fails.
StepMetrics meter(const std::function<void()>& thunk);

// Delta = ACC(poisoned) - ACC(clean); negative means the attack degraded the
// model.
double delta(double acc_poisoned, double acc_clean);

struct ModelOutcome {
  double acc_clean = 0.0;
  double acc_poisoned = 0.0;
  double delta = 0.0;  // always exactly acc_poisoned - acc_clean
};

struct EvaluationReport {
  ModelOutcome monolithic;
  ModelOutcome ensemble;
  std::size_t n_models = 1;
  std::size_t train_size = 0;
  std::size_t test_size = 0;
  uint64_t repetition_seed = 0;
  uint64_t poison_seed = 0;
  uint64_t train_seed = 0;
  std::string test_digest;  // MD5 over the held-out test set bytes
  // Wall/cpu/memory per pipeline step, in execution order. Measurements, not
  // results: kept out of the deterministic artifacts.
  std::vector<std::pair<std::string, StepMetrics>> steps;

  double step_wall(const std::string& name) const;
};

struct ExperimentResult {
  std::vector<EvaluationReport> repetitions;
  EvaluationReport mean;  // field-wise mean; delta recomputed from mean accuracies
};

// One run of the six-step process: split, poison the training set, build
// assignments, train the four models (monolithic/ensemble x clean/poisoned),
// evaluate on the held-out test set, compute deltas. `preloaded` skips the
// CSV load (the caller keeps ownership).
EvaluationReport run_single(const ExperimentConfig& cfg, uint64_t repetition_seed,
                            std::size_t n_threads = 0, const Dataset* preloaded = nullptr);

// cfg.repetitions runs with derived repetition seeds, plus the mean report.
ExperimentResult run_experiment(const ExperimentConfig& cfg, std::size_t n_threads = 0,
                                const Dataset* preloaded = nullptr);

struct SweepGrid {
  std::vector<std::size_t> n_models;
  std::vector<PerturbationKind> perturbations;
  std::vector<double> epsilon_points;
  std::vector<double> epsilon_features;
  std::vector<double> dataset_fractions{100.0};
  std::vector<double> feature_fractions{100.0};
};

// Flat "key = comma, separated, values" text format; '#' starts a comment.
// Keys: n_models, perturbations, epsilon_points, epsilon_features and the
// optional dataset_fractions / feature_fractions.
SweepGrid parse_grid_file(const std::filesystem::path& path);

struct SweepCoordinate {
  PerturbationKind kind = PerturbationKind::label_flipping;
  std::size_t n_models = 1;
  double eps_points = 0.0;
  std::optional<double> eps_features;  // absent for label flipping
  double dataset_fraction = 100.0;
  double feature_fraction = 100.0;

  // Filesystem-safe identifier, e.g. "label-flipping_N21_ep35".
  std::string key() const;
};

// Fixed enumeration order: kind, N, eps_p, eps_f, dataset%, feature%.
std::vector<SweepCoordinate> enumerate_grid(const SweepGrid& grid);

struct SweepOutcome {
  SweepCoordinate coord;
  bool skipped_existing = false;
  std::string error;  // empty on success
  std::optional<ExperimentResult> result;
};

// Runs the Cartesian product, skipping coordinates whose result file already
// exists under out_dir (resume), and rewrites the aggregate artifacts:
//   coords/<key>.json  runs.csv  aggregate.csv  table_<kind>.csv
//   results.json       plots/delta_vs_eps_points_<kind>.csv
// plus the measurement sidecars (metrics/<key>.json, timings.csv,
// plots/time_*.csv), which carry wall-clock data and are the only
// non-reproducible outputs. Per-coordinate failures are recorded in
// failures.csv without aborting the sweep.
std::vector<SweepOutcome> run_sweep(const SweepGrid& grid, const ExperimentConfig& base,
                                    const std::filesystem::path& out_dir,
                                    std::size_t n_threads = 0);

// Per-coordinate means as written to aggregate.csv.
struct AggregateRow {
  SweepCoordinate coord;
  std::size_t repetitions = 0;
  ModelOutcome monolithic;
  ModelOutcome ensemble;
};

std::vector<AggregateRow> read_aggregate_csv(const std::filesystem::path& sweep_dir);

// Outputs of a single `run` invocation: report.json, run.csv and the
// resources.json measurement sidecar.
void write_run_outputs(const ExperimentResult& result, const ExperimentConfig& cfg,
                       const std::filesystem::path& out_dir);

}  // namespace hashens
