#include "submax/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <stdexcept>
#include <thread>

#include "submax/algorithms.hpp"
#include "submax/normal.hpp"
#include "submax/rng.hpp"

namespace submax {

namespace {

void validate_config(const TrialConfig& cfg) {
  if (cfg.trials == 0) {
    throw std::invalid_argument("run_trials: trials must be >= 1");
  }
  if (cfg.n == 0 || cfg.k == 0 || cfg.k > cfg.n) {
    throw std::invalid_argument("run_trials: need 1 <= k <= n");
  }
  if (cfg.theta_override && cfg.alg != Alg::greedy) {
    throw std::invalid_argument("run_trials: theta applies to greedy only");
  }
}

TrialRecord run_one_trial(const TrialConfig& cfg, std::size_t t) {
  TrialRecord rec;
  rec.trial = t;
  rec.seed = derive(cfg.master_seed, static_cast<std::uint64_t>(t));
  try {
    GaussianMatrix M(cfg.n, cfg.n, rec.seed);
    switch (cfg.alg) {
      case Alg::las: {
        LasResult r = run_las(M, cfg.k);
        rec.ave = ave(M, r.selection);
        rec.t_las = r.t_las;
        break;
      }
      case Alg::greedy: {
        if (cfg.theta_override) {
          GreedyResult g = run_greedy(M, *cfg.theta_override);
          rec.m = g.m;
          if (g.m == 0) {
            rec.error = "greedy found no entry above theta";
          } else {
            rec.ave = ave(M, g.selection);
          }
        } else {
          try {
            GreedyResult g = greedy_for_k(M, cfg.k);
            rec.m = g.m;
            rec.ave = ave(M, g.selection);
          } catch (const UnderTargetError& e) {
            rec.m = e.achieved_m();
            rec.error = e.what();
          }
        }
        break;
      }
      case Alg::igp: {
        IgpResult r = run_igp(M, cfg.k);
        rec.ave = ave(M, r.selection);
        break;
      }
      case Alg::brute: {
        BruteResult r = brute_force(M, cfg.k);
        rec.ave = r.ave;
        break;
      }
    }
  } catch (const std::exception& e) {
    rec.error = e.what();
    rec.ave = std::numeric_limits<double>::quiet_NaN();
  }
  return rec;
}

// Runs body(t) for t in [0, count) on the requested number of threads.
// Each index is claimed exactly once; results go to disjoint slots, so the
// outcome does not depend on scheduling.
template <typename Body>
void parallel_for_index(std::size_t count, unsigned threads, Body body) {
  unsigned workers = threads == 0 ? 1u : threads;
  workers = static_cast<unsigned>(
      std::min<std::size_t>(workers, count == 0 ? 1 : count));
  if (workers <= 1) {
    for (std::size_t t = 0; t < count; ++t) body(t);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&]() {
      for (;;) {
        std::size_t t = next.fetch_add(1);
        if (t >= count) return;
        body(t);
      }
    });
  }
  for (auto& th : pool) th.join();
}

double nearest_rank(const std::vector<double>& sorted, double p) {
  auto m = static_cast<double>(sorted.size());
  auto rank = static_cast<std::size_t>(std::ceil(p * m));
  if (rank == 0) rank = 1;
  if (rank > sorted.size()) rank = sorted.size();
  return sorted[rank - 1];
}

}  // namespace

TrialStats aggregate_records(const TrialConfig& cfg,
                             std::vector<TrialRecord> records) {
  TrialStats stats;
  stats.config = cfg;
  stats.per_trial = std::move(records);

  std::vector<double> aves;
  aves.reserve(stats.per_trial.size());
  for (const TrialRecord& rec : stats.per_trial) {
    if (!rec.ok()) continue;
    aves.push_back(rec.ave);
    if (cfg.alg == Alg::las && rec.t_las) {
      ++stats.t_las_histogram[*rec.t_las];
    }
  }
  if (aves.empty()) {
    std::string detail =
        stats.per_trial.empty() ? "no trials" : stats.per_trial.front().error;
    throw std::runtime_error("run_trials: every trial failed (" + detail +
                             ")");
  }

  double sum = 0.0;
  for (double a : aves) sum += a;
  auto m = static_cast<double>(aves.size());
  stats.mean_ave = sum / m;
  double sq = 0.0;
  for (double a : aves) sq += (a - stats.mean_ave) * (a - stats.mean_ave);
  stats.std_ave = std::sqrt(sq / m);

  std::vector<double> sorted = aves;
  std::sort(sorted.begin(), sorted.end());
  stats.q05 = nearest_rank(sorted, 0.05);
  stats.q50 = nearest_rank(sorted, 0.50);
  stats.q95 = nearest_rank(sorted, 0.95);

  double nd = static_cast<double>(cfg.n);
  stats.prediction_asymptotic = predicted_ave(cfg.alg, nd, cfg.k, false);
  stats.prediction_finite = predicted_ave(cfg.alg, nd, cfg.k, true);
  return stats;
}

TrialStats run_trials(const TrialConfig& cfg, unsigned threads) {
  validate_config(cfg);
  std::vector<TrialRecord> records(cfg.trials);
  parallel_for_index(cfg.trials, threads,
                     [&](std::size_t t) { records[t] = run_one_trial(cfg, t); });
  return aggregate_records(cfg, std::move(records));
}

std::vector<double> sample_max_normalized(std::size_t n, std::size_t trials,
                                          std::uint64_t seed) {
  if (n < 10) {
    throw std::domain_error("sample_max_normalized: n must be >= 10");
  }
  if (trials == 0) {
    throw std::invalid_argument("sample_max_normalized: trials must be >= 1");
  }
  double scale = std::sqrt(2.0 * std::log(static_cast<double>(n)));
  double center = b_n(static_cast<double>(n));
  std::vector<double> out;
  out.reserve(trials);
  for (std::size_t t = 0; t < trials; ++t) {
    Rng64 rng(derive(seed, static_cast<std::uint64_t>(t)));
    std::uint64_t best = 0;
    for (std::size_t i = 0; i < n; ++i) {
      best = std::max(best, rng.next());
    }
    out.push_back(scale * (uniform_to_normal(best) - center));
  }
  return out;
}

double ks_statistic(const std::vector<double>& samples,
                    const std::function<double(double)>& cdf) {
  if (samples.empty()) {
    throw std::invalid_argument("ks_statistic: samples must be nonempty");
  }
  std::vector<double> sorted = samples;
  std::sort(sorted.begin(), sorted.end());
  auto m = static_cast<double>(sorted.size());
  double d = 0.0;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    double f = cdf(sorted[i]);
    d = std::max(d, f - static_cast<double>(i) / m);
    d = std::max(d, static_cast<double>(i + 1) / m - f);
  }
  return d;
}

double t_las_tail(const TrialStats& stats, std::size_t t) {
  if (stats.config.alg != Alg::las) {
    throw std::domain_error("t_las_tail: stats are not from an LAS run");
  }
  std::size_t total = 0;
  std::size_t above = 0;
  for (const TrialRecord& rec : stats.per_trial) {
    if (!rec.ok() || !rec.t_las) continue;
    ++total;
    if (*rec.t_las > t) ++above;
  }
  if (total == 0) {
    throw std::domain_error("t_las_tail: no successful trials");
  }
  return static_cast<double>(above) / static_cast<double>(total);
}

PairedResult igp_vs_las(std::size_t n, std::size_t k, std::size_t trials,
                        std::uint64_t seed, unsigned threads) {
  if (trials == 0) {
    throw std::invalid_argument("igp_vs_las: trials must be >= 1");
  }
  if (n == 0 || k == 0 || k > n) {
    throw std::invalid_argument("igp_vs_las: need 1 <= k <= n");
  }
  std::vector<std::pair<double, double>> pairs(trials);
  parallel_for_index(trials, threads, [&](std::size_t t) {
    GaussianMatrix M(n, n, derive(seed, static_cast<std::uint64_t>(t)));
    LasResult las = run_las(M, k);
    IgpResult igp = run_igp(M, k);
    pairs[t] = {ave(M, las.selection), ave(M, igp.selection)};
  });

  PairedResult out;
  out.trials = trials;
  double sum_las = 0.0;
  double sum_igp = 0.0;
  std::size_t wins = 0;
  for (const auto& [a_las, a_igp] : pairs) {
    sum_las += a_las;
    sum_igp += a_igp;
    if (a_igp > a_las) ++wins;
  }
  out.mean_las = sum_las / static_cast<double>(trials);
  out.mean_igp = sum_igp / static_cast<double>(trials);
  out.ratio_of_means = out.mean_igp / out.mean_las;
  out.win_fraction = static_cast<double>(wins) / static_cast<double>(trials);
  return out;
}

}  // namespace submax
