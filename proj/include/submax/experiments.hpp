#pragma once

#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "submax/matrix.hpp"
#include "submax/theory.hpp"

namespace submax {

struct TrialConfig {
  Alg alg = Alg::las;
  std::size_t n = 0;
  std::size_t k = 0;
  std::size_t trials = 0;
  std::uint64_t master_seed = 0;
  std::optional<double> theta_override;  // greedy only
};

struct TrialRecord {
  std::size_t trial = 0;
  std::uint64_t seed = 0;
  double ave = std::numeric_limits<double>::quiet_NaN();
  std::optional<std::size_t> t_las;
  std::optional<std::size_t> m;
  std::string error;  // empty when the trial succeeded

  bool ok() const { return error.empty(); }
};

struct TrialStats {
  TrialConfig config;
  std::vector<TrialRecord> per_trial;
  double mean_ave = 0.0;
  double std_ave = 0.0;
  double q05 = 0.0;
  double q50 = 0.0;
  double q95 = 0.0;
  std::map<std::size_t, std::size_t> t_las_histogram;  // las runs only
  double prediction_asymptotic = 0.0;
  double prediction_finite = 0.0;
};

// Runs cfg.trials independent trials; trial t draws gen_gaussian(n, n,
// derive(master_seed, t)). Per-trial failures are recorded in the record's
// error field and excluded from the statistics; only a run with no
// successful trial throws. Any thread count reproduces the single-threaded
// output bit for bit (seeds are pre-derived, aggregation is a fixed-order
// reduction over the trial index).
TrialStats run_trials(const TrialConfig& cfg, unsigned threads = 1);

// Statistics over an explicit record table, exposed so partial runs can be
// merged: concatenating record slices in trial order and aggregating equals
// the monolithic run exactly.
TrialStats aggregate_records(const TrialConfig& cfg,
                             std::vector<TrialRecord> records);

// trials samples of sqrt(2 ln n) * (max of n fresh standard normals - b_n),
// one derived child stream per trial. The maximum is taken over the raw
// integer stream, which the monotone uniform-to-normal map makes equivalent
// to maximizing the normals themselves.
std::vector<double> sample_max_normalized(std::size_t n, std::size_t trials,
                                          std::uint64_t seed);

// Kolmogorov-Smirnov sup-distance between the empirical CDF of samples and
// the given CDF.
double ks_statistic(const std::vector<double>& samples,
                    const std::function<double(double)>& cdf);

// Empirical P(T_LAS > t) over the successful trials of an LAS run.
double t_las_tail(const TrialStats& stats, std::size_t t);

struct PairedResult {
  double ratio_of_means = 0.0;  // mean_igp / mean_las
  double win_fraction = 0.0;    // fraction of pairs with igp strictly ahead
  double mean_las = 0.0;
  double mean_igp = 0.0;
  std::size_t trials = 0;
};

// Paired comparison: trial t runs both algorithms on the same matrix
// gen_gaussian(n, n, derive(seed, t)).
PairedResult igp_vs_las(std::size_t n, std::size_t k, std::size_t trials,
                        std::uint64_t seed, unsigned threads = 1);

}  // namespace submax
