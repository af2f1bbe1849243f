#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "submax/algorithms.hpp"
#include "submax/experiments.hpp"
#include "submax/theory.hpp"

namespace submax {

// All emitters return canonical JSON text (sorted keys, shortest round-trip
// numbers, no whitespace variation) so identical inputs serialize to
// identical bytes.

std::string alg_name(Alg alg);
Alg alg_from_name(const std::string& name);

struct RunContext {
  Alg alg = Alg::las;
  std::size_t n = 0;
  std::size_t k = 0;
  std::optional<std::uint64_t> seed;  // absent when the matrix came from a file
};

std::string las_run_json(const RunContext& ctx, const LasResult& r,
                         double ave_value);
std::string greedy_run_json(const RunContext& ctx, const GreedyResult& r,
                            double ave_value, bool under_target);
std::string igp_run_json(const RunContext& ctx, const IgpResult& r,
                         double ave_value);
std::string brute_run_json(const RunContext& ctx, const BruteResult& r);

std::string trial_stats_json(const TrialStats& stats);

// header trial,seed,ave,t_las,m; blank cells where a field does not apply.
std::string trial_csv(const TrialStats& stats);

// res x res f-values, row i = y1 cell index ascending.
std::string region_csv(const RegionGrid& grid);
std::string region_sidecar_json(
    const RegionGrid& grid, std::size_t components,
    const std::optional<std::pair<double, double>>& gap);

std::string critical_json(const CriticalAlphas& c);
std::string exponent_json(double exponent, double f_value);

struct VerifyCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct VerifyReport {
  std::string suite;
  bool passed = false;
  std::vector<VerifyCheck> checks;
};

std::string verify_report_json(const VerifyReport& report);

}  // namespace submax
