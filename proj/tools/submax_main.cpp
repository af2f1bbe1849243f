#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <limits>
#include <memory>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "submax/algorithms.hpp"
#include "submax/experiments.hpp"
#include "submax/io.hpp"
#include "submax/serialize.hpp"
#include "submax/theory.hpp"
#include "submax/verify.hpp"

namespace {

using namespace submax;

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out << text;
  if (!out) throw std::runtime_error("write failed: " + path);
}

unsigned resolve_threads(const std::optional<unsigned>& flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv("SUBMAX_THREADS")) {
    char* end = nullptr;
    unsigned long v = std::strtoul(env, &end, 10);
    if (end && *end == '\0' && v >= 1 && v <= 1024) {
      return static_cast<unsigned>(v);
    }
    std::cerr << "ignoring invalid SUBMAX_THREADS value: " << env << "\n";
  }
  return 1;
}

int cmd_gen(std::size_t n, std::optional<std::size_t> m,
            std::uint64_t seed, const std::optional<std::string>& out) {
  Descriptor d{n, m.value_or(n), seed};
  if (out) {
    write_csv(matrix_from_descriptor(d), *out);
  }
  std::cout << descriptor_to_json(d);
  return 0;
}

int cmd_run(const std::string& alg_str, std::optional<std::size_t> n,
            std::size_t k, std::optional<std::uint64_t> seed,
            std::optional<double> theta,
            const std::optional<std::string>& in_path) {
  Alg alg = alg_from_name(alg_str);
  if (theta && alg != Alg::greedy) {
    std::cerr << "--theta applies to greedy only\n";
    return 1;
  }
  if (!in_path && (!n || !seed)) {
    std::cerr << "run needs --n and --seed, or a matrix file via --in\n";
    return 1;
  }
  if (in_path && seed) {
    std::cerr << "--seed is meaningless with --in; pick one\n";
    return 1;
  }

  std::unique_ptr<Matrix> M;
  if (in_path) {
    auto loaded = std::make_unique<DenseMatrix>(read_csv(*in_path));
    if (n && *n != loaded->rows()) {
      std::cerr << "--n " << *n << " does not match the " << loaded->rows()
                << "-row matrix in " << *in_path << "\n";
      return 1;
    }
    M = std::move(loaded);
  } else {
    M = std::make_unique<GaussianMatrix>(*n, *n, *seed);
  }

  RunContext ctx;
  ctx.alg = alg;
  ctx.n = M->rows();
  ctx.k = k;
  ctx.seed = seed;

  switch (alg) {
    case Alg::las: {
      LasResult r = run_las(*M, k);
      std::cout << las_run_json(ctx, r, ave(*M, r.selection));
      return 0;
    }
    case Alg::greedy: {
      if (theta) {
        GreedyResult r = run_greedy(*M, *theta);
        double a = r.m > 0 ? ave(*M, r.selection)
                           : std::numeric_limits<double>::quiet_NaN();
        std::cout << greedy_run_json(ctx, r, a, r.m < k);
        return 0;
      }
      try {
        GreedyResult r = greedy_for_k(*M, k);
        std::cout << greedy_run_json(ctx, r, ave(*M, r.selection), false);
      } catch (const UnderTargetError& e) {
        const GreedyResult& r = e.partial();
        double a = r.m > 0 ? ave(*M, r.selection)
                           : std::numeric_limits<double>::quiet_NaN();
        std::cerr << e.what() << "\n";
        std::cout << greedy_run_json(ctx, r, a, true);
      }
      return 0;
    }
    case Alg::igp: {
      IgpResult r = run_igp(*M, k);
      std::cout << igp_run_json(ctx, r, ave(*M, r.selection));
      return 0;
    }
    case Alg::brute: {
      BruteResult r = brute_force(*M, k);
      std::cout << brute_run_json(ctx, r);
      return 0;
    }
  }
  return 1;
}

int cmd_sweep(const std::string& alg_str, std::size_t n, std::size_t k,
              std::size_t trials, std::uint64_t seed,
              std::optional<double> theta,
              const std::optional<std::string>& csv_path, unsigned threads) {
  TrialConfig cfg;
  cfg.alg = alg_from_name(alg_str);
  cfg.n = n;
  cfg.k = k;
  cfg.trials = trials;
  cfg.master_seed = seed;
  cfg.theta_override = theta;
  TrialStats stats = run_trials(cfg, threads);
  if (csv_path) write_text(*csv_path, trial_csv(stats));
  std::cout << trial_stats_json(stats);
  return 0;
}

int cmd_region(double alpha, std::size_t res,
               const std::optional<std::string>& out) {
  RegionGrid grid = region_grid(alpha, res);
  std::size_t components = region_components(grid);
  auto gap = projection_gap(grid, Axis::y1);
  std::string sidecar = region_sidecar_json(grid, components, gap);
  if (out) {
    write_text(*out, region_csv(grid));
    write_text(*out + ".json", sidecar);
  }
  std::cout << sidecar;
  return 0;
}

int cmd_critical() {
  CriticalAlphas c{critical_alpha1(), critical_alpha2()};
  std::cout << critical_json(c);
  return 0;
}

int cmd_exponent(double n, std::size_t k, double alpha, double y1, double y2,
                 double delta) {
  double exponent = overlap_exponent_numeric(n, k, alpha, y1, y2, delta);
  std::cout << exponent_json(exponent, f_overlap(alpha, y1, y2));
  return 0;
}

int cmd_verify(const std::string& suite, std::uint64_t seed,
               unsigned threads) {
  VerifyReport report = run_verify_suite(suite, seed, threads);
  std::cout << verify_report_json(report);
  if (!report.passed) {
    std::cerr << "verify suite '" << suite << "' failed\n";
    return 2;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"large-average submatrix search and overlap analysis"};
  app.require_subcommand(1);

  // gen
  auto* gen = app.add_subcommand("gen", "emit a seeded Gaussian matrix");
  std::size_t gen_n = 0;
  std::optional<std::size_t> gen_m;
  std::uint64_t gen_seed = 0;
  std::optional<std::string> gen_out;
  gen->add_option("--n", gen_n, "rows")->required()->check(CLI::PositiveNumber);
  gen->add_option("--m", gen_m, "columns (defaults to --n)")
      ->check(CLI::PositiveNumber);
  gen->add_option("--seed", gen_seed, "stream seed")->required();
  gen->add_option("--out", gen_out, "write the matrix CSV here");

  // run
  auto* run = app.add_subcommand("run", "single algorithm run");
  std::string run_alg;
  std::optional<std::size_t> run_n;
  std::size_t run_k = 0;
  std::optional<std::uint64_t> run_seed;
  std::optional<double> run_theta;
  std::optional<std::string> run_in;
  run->add_option("--alg", run_alg, "las|greedy|igp|brute")
      ->required()
      ->check(CLI::IsMember({"las", "greedy", "igp", "brute"}));
  run->add_option("--n", run_n, "matrix size")->check(CLI::PositiveNumber);
  run->add_option("--k", run_k, "target size")
      ->required()
      ->check(CLI::PositiveNumber);
  run->add_option("--seed", run_seed, "matrix seed");
  run->add_option("--theta", run_theta, "greedy threshold override");
  run->add_option("--in", run_in, "load the matrix from a CSV file");

  // sweep
  auto* sweep = app.add_subcommand("sweep", "seeded Monte Carlo trials");
  std::string sweep_alg;
  std::size_t sweep_n = 0;
  std::size_t sweep_k = 0;
  std::size_t sweep_trials = 0;
  std::uint64_t sweep_seed = 0;
  std::optional<double> sweep_theta;
  std::optional<std::string> sweep_csv;
  std::optional<unsigned> sweep_threads;
  sweep->add_option("--alg", sweep_alg, "las|greedy|igp|brute")
      ->required()
      ->check(CLI::IsMember({"las", "greedy", "igp", "brute"}));
  sweep->add_option("--n", sweep_n, "matrix size")
      ->required()
      ->check(CLI::PositiveNumber);
  sweep->add_option("--k", sweep_k, "target size")
      ->required()
      ->check(CLI::PositiveNumber);
  sweep->add_option("--trials", sweep_trials, "trial count")
      ->required()
      ->check(CLI::PositiveNumber);
  sweep->add_option("--seed", sweep_seed, "master seed")->required();
  sweep->add_option("--theta", sweep_theta, "greedy threshold override");
  sweep->add_option("--csv", sweep_csv, "write per-trial CSV here");
  sweep->add_option("--threads", sweep_threads,
                    "worker threads (default SUBMAX_THREADS or 1)");

  // ogp-region
  auto* region = app.add_subcommand("ogp-region", "overlap region raster");
  double region_alpha = 0.0;
  std::size_t region_res = 0;
  std::optional<std::string> region_out;
  region->add_option("--alpha", region_alpha, "value level")->required();
  region->add_option("--res", region_res, "grid resolution")
      ->required()
      ->check(CLI::PositiveNumber);
  region->add_option("--out", region_out, "write f-value CSV and sidecar here");

  // ogp-critical
  auto* critical =
      app.add_subcommand("ogp-critical", "critical alphas of the region");

  // ogp-exponent
  auto* exponent =
      app.add_subcommand("ogp-exponent", "numeric pair-count exponent");
  double exp_n = 0.0;
  std::size_t exp_k = 0;
  double exp_alpha = 0.0;
  double exp_y1 = 0.0;
  double exp_y2 = 0.0;
  double exp_delta = 0.0;
  exponent->add_option("--n", exp_n, "matrix size (real-valued ok)")
      ->required();
  exponent->add_option("--k", exp_k, "submatrix size")
      ->required()
      ->check(CLI::PositiveNumber);
  exponent->add_option("--alpha", exp_alpha, "value level")->required();
  exponent->add_option("--y1", exp_y1, "row overlap")->required();
  exponent->add_option("--y2", exp_y2, "column overlap")->required();
  exponent->add_option("--delta", exp_delta, "window half-width")->required();

  // verify
  auto* verify = app.add_subcommand("verify", "built-in self checks");
  std::string verify_suite;
  std::uint64_t verify_seed = 12345;
  std::optional<unsigned> verify_threads;
  verify->add_option("--suite", verify_suite, "tails|anova|gumbel|oracle|ogp")
      ->required()
      ->check(CLI::IsMember({"tails", "anova", "gumbel", "oracle", "ogp"}));
  verify->add_option("--seed", verify_seed, "suite seed");
  verify->add_option("--threads", verify_threads, "worker threads");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (*gen) return cmd_gen(gen_n, gen_m, gen_seed, gen_out);
    if (*run) {
      return cmd_run(run_alg, run_n, run_k, run_seed, run_theta, run_in);
    }
    if (*sweep) {
      return cmd_sweep(sweep_alg, sweep_n, sweep_k, sweep_trials, sweep_seed,
                       sweep_theta, sweep_csv, resolve_threads(sweep_threads));
    }
    if (*region) return cmd_region(region_alpha, region_res, region_out);
    if (*critical) return cmd_critical();
    if (*exponent) {
      return cmd_exponent(exp_n, exp_k, exp_alpha, exp_y1, exp_y2, exp_delta);
    }
    if (*verify) {
      return cmd_verify(verify_suite, verify_seed,
                        resolve_threads(verify_threads));
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
