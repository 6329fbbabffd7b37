#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "virpos/observables.hpp"
#include "virpos/positivity.hpp"

namespace virpos {

struct SweepConfig {
  int r = 3;
  int k = 2;
  int i = 0;
  std::vector<int> n_list;
  long trials = 100;
  std::uint64_t seed = 0;
  int threads = 1;
};

// Parameter box of the proven limit: r <= 10, i+k <= 100, 2 <= k <= 27,
// or i+k <= 29 for any r. Outside it the sweep still runs, just labeled.
bool beyond_proven_range(int r, int k, int i);

// Seed of a single trial, derived so any one trial is reproducible alone.
std::uint64_t trial_seed(std::uint64_t seed, int n, long trial);

struct WilsonInterval {
  double lo = 0;
  double hi = 0;
};
// Wilson score interval at 95%; sane at zero counts.
WilsonInterval wilson95(long successes, long trials);

struct TrialResult {
  bool ok = false;
  std::string error;  // per-trial failure log entry when !ok
  Sign verdict = Sign::Undetermined;
  mpq_class alpha0_value;
};

// One Monte Carlo trial: sample a graph, take the exact matching prefix up
// to i+k, decide Delta^k u(i), evaluate alpha0.
TrialResult run_trial(int n, int r, int k, int i, std::uint64_t seed,
                      const SignPolicy& policy = {});

// Commutative aggregation: merging partial accumulators in any grouping
// gives the same row, which is what makes the sweep resumable and
// parallel-safe.
struct SweepAccumulator {
  long successes = 0;
  long failures = 0;
  long violations = 0;
  long undetermined = 0;
  mpq_class sum;      // of alpha0 samples
  mpq_class sum_sq;
  std::vector<std::string> failure_log;

  void add(const TrialResult& t);
  void merge(const SweepAccumulator& o);
};

struct SweepRow {
  int n = 0, r = 0, k = 0, i = 0;
  long requested = 0;
  long trials = 0;  // successful trials (the frequency denominator)
  long failures = 0;
  long violations = 0;
  long undetermined = 0;
  double frequency = 0;
  WilsonInterval wilson;
  mpq_class mean_alpha0;
  mpq_class scaled_alpha0;  // n^(k-1) * mean
  mpq_class limit_const;    // (k-2)! (1/r^(k-1) - 2)
  std::optional<mpq_class> beta_over_alpha2;
  bool alpha_non_negative = false;
  bool beyond_range = false;
  std::vector<std::string> failure_log;
};

struct SweepReport {
  SweepConfig config;
  std::vector<SweepRow> rows;
};

SweepRow finalize_row(const SweepConfig& cfg, int n, const SweepAccumulator& acc);

// For each n: `trials` configuration-model samples with trial-indexed
// seeds, verdict + alpha0 per sample, aggregated per the accumulator.
// Per-trial sampler failures are logged; a row aborts only if every trial
// failed.
SweepReport violation_sweep(const SweepConfig& cfg, const SignPolicy& policy = {});

struct ScalingRow {
  int n = 0;
  mpq_class mean_alpha0;
  mpq_class scaled_alpha0;
  mpq_class limit_const;
  mpq_class rel_gap;  // |scaled - limit| / |limit|
};

std::vector<ScalingRow> scaling_check(const SweepConfig& cfg,
                                      const SignPolicy& policy = {});

}  // namespace virpos
