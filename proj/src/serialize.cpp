#include "submax/serialize.hpp"

#include <cmath>
#include <stdexcept>

#include "json.hpp"

#include "submax/io.hpp"

namespace submax {

namespace {

using nlohmann::json;

json selection_json(const Selection& sel) {
  json j;
  j["rows"] = sel.rows;
  j["cols"] = sel.cols;
  return j;
}

json base_run_json(const RunContext& ctx, const Selection& sel,
                   double ave_value) {
  json j = selection_json(sel);
  j["alg"] = alg_name(ctx.alg);
  j["n"] = ctx.n;
  j["k"] = ctx.k;
  if (ctx.seed) {
    j["seed"] = *ctx.seed;
  } else {
    j["seed"] = nullptr;
  }
  j["ave"] = ave_value;
  return j;
}

std::string dump(const json& j) { return j.dump() + "\n"; }

}  // namespace

std::string alg_name(Alg alg) {
  switch (alg) {
    case Alg::las:
      return "las";
    case Alg::greedy:
      return "greedy";
    case Alg::igp:
      return "igp";
    case Alg::brute:
      return "brute";
  }
  throw std::invalid_argument("alg_name: unknown algorithm");
}

Alg alg_from_name(const std::string& name) {
  if (name == "las") return Alg::las;
  if (name == "greedy") return Alg::greedy;
  if (name == "igp") return Alg::igp;
  if (name == "brute") return Alg::brute;
  throw std::invalid_argument("unknown algorithm: " + name);
}

std::string las_run_json(const RunContext& ctx, const LasResult& r,
                         double ave_value) {
  json j = base_run_json(ctx, r.selection, ave_value);
  j["t_las"] = r.t_las;
  j["converged"] = r.converged;
  return dump(j);
}

std::string greedy_run_json(const RunContext& ctx, const GreedyResult& r,
                            double ave_value, bool under_target) {
  json j = base_run_json(ctx, r.selection, ave_value);
  j["m"] = r.m;
  j["theta"] = r.theta;
  j["under_target"] = under_target;
  return dump(j);
}

std::string igp_run_json(const RunContext& ctx, const IgpResult& r,
                         double ave_value) {
  json j = base_run_json(ctx, r.selection, ave_value);
  j["step_sums"] = r.step_sums;
  return dump(j);
}

std::string brute_run_json(const RunContext& ctx, const BruteResult& r) {
  return dump(base_run_json(ctx, r.selection, r.ave));
}

std::string trial_stats_json(const TrialStats& stats) {
  const TrialConfig& cfg = stats.config;
  json j;
  j["alg"] = alg_name(cfg.alg);
  j["n"] = cfg.n;
  j["k"] = cfg.k;
  j["trials"] = cfg.trials;
  j["master_seed"] = cfg.master_seed;
  if (cfg.theta_override) {
    j["theta"] = *cfg.theta_override;
  } else {
    j["theta"] = nullptr;
  }
  j["mean_ave"] = stats.mean_ave;
  j["std_ave"] = stats.std_ave;
  j["q05"] = stats.q05;
  j["q50"] = stats.q50;
  j["q95"] = stats.q95;
  j["prediction_asymptotic"] = stats.prediction_asymptotic;
  j["prediction_finite"] = stats.prediction_finite;
  if (cfg.alg == Alg::las) {
    json hist = json::object();
    for (const auto& [t, count] : stats.t_las_histogram) {
      hist[std::to_string(t)] = count;
    }
    j["t_las_histogram"] = hist;
  } else {
    j["t_las_histogram"] = nullptr;
  }
  json per = json::array();
  for (const TrialRecord& rec : stats.per_trial) {
    json r;
    r["trial"] = rec.trial;
    r["seed"] = rec.seed;
    if (rec.ok() && std::isfinite(rec.ave)) {
      r["ave"] = rec.ave;
    } else {
      r["ave"] = nullptr;
    }
    if (rec.t_las) {
      r["t_las"] = *rec.t_las;
    } else {
      r["t_las"] = nullptr;
    }
    if (rec.m) {
      r["m"] = *rec.m;
    } else {
      r["m"] = nullptr;
    }
    if (rec.error.empty()) {
      r["error"] = nullptr;
    } else {
      r["error"] = rec.error;
    }
    per.push_back(r);
  }
  j["per_trial"] = per;
  return dump(j);
}

std::string trial_csv(const TrialStats& stats) {
  std::string out = "trial,seed,ave,t_las,m\n";
  for (const TrialRecord& rec : stats.per_trial) {
    out += std::to_string(rec.trial);
    out += ',';
    out += std::to_string(rec.seed);
    out += ',';
    if (rec.ok() && std::isfinite(rec.ave)) out += format_double(rec.ave);
    out += ',';
    if (rec.t_las) out += std::to_string(*rec.t_las);
    out += ',';
    if (rec.m) out += std::to_string(*rec.m);
    out += '\n';
  }
  return out;
}

std::string region_csv(const RegionGrid& grid) {
  std::string out;
  for (std::size_t i = 0; i < grid.resolution; ++i) {
    for (std::size_t j = 0; j < grid.resolution; ++j) {
      if (j > 0) out += ',';
      out += format_double(grid.f_at(i, j));
    }
    out += '\n';
  }
  return out;
}

std::string region_sidecar_json(
    const RegionGrid& grid, std::size_t components,
    const std::optional<std::pair<double, double>>& gap) {
  json j;
  j["alpha"] = grid.alpha;
  j["resolution"] = grid.resolution;
  j["components"] = components;
  if (gap) {
    j["gap"] = json::array({gap->first, gap->second});
  } else {
    j["gap"] = nullptr;
  }
  return dump(j);
}

std::string critical_json(const CriticalAlphas& c) {
  json j;
  j["alpha1"] = c.alpha1;
  j["alpha2"] = c.alpha2;
  return dump(j);
}

std::string exponent_json(double exponent, double f_value) {
  json j;
  j["exponent"] = exponent;
  j["f"] = f_value;
  return dump(j);
}

std::string verify_report_json(const VerifyReport& report) {
  json j;
  j["suite"] = report.suite;
  j["passed"] = report.passed;
  json checks = json::array();
  for (const VerifyCheck& c : report.checks) {
    json cj;
    cj["name"] = c.name;
    cj["passed"] = c.passed;
    cj["detail"] = c.detail;
    checks.push_back(cj);
  }
  j["checks"] = checks;
  return dump(j);
}

}  // namespace submax
