#include "virpos/sweep.hpp"

#include <cmath>
#include <thread>

#include "virpos/combinatorics.hpp"
#include "virpos/errors.hpp"
#include "virpos/rng.hpp"
#include "virpos/sample.hpp"

namespace virpos {

bool beyond_proven_range(int r, int k, int i) {
  if (i + k <= 29) return false;
  if (r <= 10 && i + k <= 100 && k >= 2 && k <= 27) return false;
  return true;
}

std::uint64_t trial_seed(std::uint64_t seed, int n, long trial) {
  return combine_seed(seed, static_cast<std::uint64_t>(n),
                      static_cast<std::uint64_t>(trial));
}

WilsonInterval wilson95(long successes, long trials) {
  WilsonInterval w;
  if (trials <= 0) return w;
  const double z = 1.959963984540054;  // 97.5% normal quantile
  const double z2 = z * z;
  const double nd = static_cast<double>(trials);
  const double p = static_cast<double>(successes) / nd;
  const double denom = 1.0 + z2 / nd;
  const double center = (p + z2 / (2.0 * nd)) / denom;
  const double half =
      z * std::sqrt(p * (1.0 - p) / nd + z2 / (4.0 * nd * nd)) / denom;
  w.lo = std::max(0.0, center - half);
  w.hi = std::min(1.0, center + half);
  return w;
}

TrialResult run_trial(int n, int r, int k, int i, std::uint64_t seed,
                      const SignPolicy& policy) {
  TrialResult t;
  try {
    BipartiteGraph g = sample_configuration(n, r, seed);
    MatchSequence ms = match_prefix_walks(g, i + k);
    t.verdict = delta_sign(ms, k, i, policy).sign;
    Alpha0Value a = alpha0(ms, k, i);
    if (!a.is_exact)
      throw Error("alpha0 fell back to interval; sweep needs exact samples");
    t.alpha0_value = a.value;
    t.ok = true;
  } catch (const Error& e) {
    t.error = e.what();
  }
  return t;
}

void SweepAccumulator::add(const TrialResult& t) {
  if (!t.ok) {
    ++failures;
    failure_log.push_back(t.error);
    return;
  }
  ++successes;
  if (t.verdict == Sign::Negative) ++violations;
  if (t.verdict == Sign::Undetermined) ++undetermined;
  sum += t.alpha0_value;
  sum_sq += t.alpha0_value * t.alpha0_value;
}

void SweepAccumulator::merge(const SweepAccumulator& o) {
  successes += o.successes;
  failures += o.failures;
  violations += o.violations;
  undetermined += o.undetermined;
  sum += o.sum;
  sum_sq += o.sum_sq;
  failure_log.insert(failure_log.end(), o.failure_log.begin(), o.failure_log.end());
}

SweepRow finalize_row(const SweepConfig& cfg, int n, const SweepAccumulator& acc) {
  SweepRow row;
  row.n = n;
  row.r = cfg.r;
  row.k = cfg.k;
  row.i = cfg.i;
  row.requested = cfg.trials;
  row.trials = acc.successes;
  row.failures = acc.failures;
  row.violations = acc.violations;
  row.undetermined = acc.undetermined;
  row.failure_log = acc.failure_log;
  row.beyond_range = beyond_proven_range(cfg.r, cfg.k, cfg.i);
  if (acc.successes > 0) {
    row.frequency = static_cast<double>(acc.violations) /
                    static_cast<double>(acc.successes);
    row.wilson = wilson95(acc.violations, acc.successes);
    row.mean_alpha0 = acc.sum / mpq_class(static_cast<unsigned long>(acc.successes));
    row.mean_alpha0.canonicalize();
    row.scaled_alpha0 = row.mean_alpha0 * mpq_class(pow_ui(mpz_class(n), cfg.k - 1));
    row.scaled_alpha0.canonicalize();
  }
  row.limit_const = asymptotic_alpha0(cfg.k, cfg.r, 1);  // n = 1 leaves the constant
  if (acc.successes >= 2) {
    BoundEstimate est =
        second_moment_bound_from_sums(acc.sum, acc.sum_sq, acc.successes);
    row.beta_over_alpha2 = est.bound;
    row.alpha_non_negative = est.alpha_non_negative;
  }
  return row;
}

namespace {

SweepAccumulator run_block(const SweepConfig& cfg, int n, long first, long last,
                           const SignPolicy& policy) {
  SweepAccumulator acc;
  for (long t = first; t < last; ++t) {
    TrialResult res =
        run_trial(n, cfg.r, cfg.k, cfg.i, trial_seed(cfg.seed, n, t), policy);
    if (!res.ok)
      res.error = "n=" + std::to_string(n) + " trial=" + std::to_string(t) +
                  ": " + res.error;
    acc.add(res);
  }
  return acc;
}

}  // namespace

SweepReport violation_sweep(const SweepConfig& cfg, const SignPolicy& policy) {
  if (cfg.trials < 1) throw Error("violation_sweep: trials >= 1 required");
  if (cfg.n_list.empty()) throw Error("violation_sweep: empty n list");
  for (int n : cfg.n_list)
    if (cfg.i + cfg.k > n)
      throw IndexError("violation_sweep: i + k exceeds n=" + std::to_string(n));

  SweepReport report;
  report.config = cfg;
  const int workers = std::max(1, cfg.threads);
  for (int n : cfg.n_list) {
    SweepAccumulator acc;
    if (workers == 1 || cfg.trials < 2 * workers) {
      acc = run_block(cfg, n, 0, cfg.trials, policy);
    } else {
      std::vector<SweepAccumulator> parts(workers);
      std::vector<std::thread> pool;
      const long per = (cfg.trials + workers - 1) / workers;
      for (int w = 0; w < workers; ++w) {
        long first = w * per;
        long last = std::min<long>(cfg.trials, first + per);
        if (first >= last) break;
        pool.emplace_back([&, w, first, last] {
          parts[w] = run_block(cfg, n, first, last, policy);
        });
      }
      for (auto& th : pool) th.join();
      for (const auto& part : parts) acc.merge(part);  // fixed merge order
    }
    if (acc.successes == 0)
      throw Error("violation_sweep: every trial failed at n=" + std::to_string(n));
    report.rows.push_back(finalize_row(cfg, n, acc));
  }
  return report;
}

std::vector<ScalingRow> scaling_check(const SweepConfig& cfg,
                                      const SignPolicy& policy) {
  SweepReport report = violation_sweep(cfg, policy);
  std::vector<ScalingRow> rows;
  rows.reserve(report.rows.size());
  for (const auto& r : report.rows) {
    ScalingRow s;
    s.n = r.n;
    s.mean_alpha0 = r.mean_alpha0;
    s.scaled_alpha0 = r.scaled_alpha0;
    s.limit_const = r.limit_const;
    mpq_class diff = r.scaled_alpha0 - r.limit_const;
    s.rel_gap = abs(diff) / abs(r.limit_const);
    s.rel_gap.canonicalize();
    rows.push_back(std::move(s));
  }
  return rows;
}

}  // namespace virpos
