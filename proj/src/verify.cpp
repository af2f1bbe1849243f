#include "submax/verify.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "submax/algorithms.hpp"
#include "submax/decompose.hpp"
#include "submax/dominance.hpp"
#include "submax/experiments.hpp"
#include "submax/matrix.hpp"
#include "submax/normal.hpp"
#include "submax/overlap.hpp"
#include "submax/rng.hpp"
#include "submax/theory.hpp"

namespace submax {

namespace {

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(12);
  os << v;
  return os.str();
}

VerifyCheck check(std::string name, bool passed, std::string detail) {
  return VerifyCheck{std::move(name), passed, std::move(detail)};
}

// ---- tails ----

VerifyReport suite_tails() {
  VerifyReport report;
  report.suite = "tails";

  {
    std::size_t inside = 0;
    double worst = 0.0;
    for (int i = 0; i <= 600; ++i) {
      double u = 2.0 + 0.01 * i;
      TailBounds b = tail_bounds(u);
      double q = normal_tail(u);
      if (b.lower <= q && q <= b.upper && b.lower > 0.0) {
        ++inside;
      } else {
        worst = std::max(worst, std::max(b.lower - q, q - b.upper));
      }
    }
    report.checks.push_back(check(
        "tail_sandwich_grid", inside == 601,
        std::to_string(inside) + "/601 inside, worst excess " + fmt(worst)));
  }

  {
    double worst = 0.0;
    for (int i = 1; i < 1000; ++i) {
      double p = static_cast<double>(i) / 1000.0;
      worst = std::max(worst, std::abs(normal_cdf(normal_quantile(p)) - p));
    }
    report.checks.push_back(check("quantile_cdf_roundtrip", worst <= 1e-14,
                                  "max abs error " + fmt(worst)));
  }

  {
    double worst = 0.0;
    for (double p : {1e-300, 1e-100, 1e-20, 1e-10, 1e-6}) {
      double q = normal_quantile(p);
      worst = std::max(worst, std::abs(normal_cdf(q) - p) / p);
    }
    report.checks.push_back(check("quantile_cdf_deep_tail", worst <= 1e-12,
                                  "max rel error " + fmt(worst)));
  }

  {
    bool monotone = true;
    double prev = normal_tail(0.0);
    for (int i = 1; i <= 3700; ++i) {
      double cur = normal_tail(0.01 * i);
      if (!(cur < prev)) {
        monotone = false;
        break;
      }
      prev = cur;
    }
    report.checks.push_back(
        check("tail_strictly_decreasing", monotone, "u grid [0, 37]"));
  }

  {
    // Same sandwich against independently computed log-space bounds, far
    // beyond double underflow of the density.
    bool ok = true;
    const double log_sqrt_2pi = 0.5 * std::log(8.0 * std::atan(1.0));
    for (double u : {40.0, 100.0, 1000.0}) {
      double envelope = -0.5 * u * u - std::log(u) - log_sqrt_2pi;
      double lower = envelope + std::log1p(-2.0 / (u * u));
      double lt = log_normal_tail(u);
      if (!(lower <= lt && lt <= envelope)) ok = false;
    }
    report.checks.push_back(check("log_tail_sandwich", ok, "u in {40,100,1000}"));
  }

  report.passed = std::all_of(report.checks.begin(), report.checks.end(),
                              [](const VerifyCheck& c) { return c.passed; });
  return report;
}

// ---- anova ----

double max_abs_diff(const Matrix& A, const Matrix& B) {
  double worst = 0.0;
  for (std::size_t i = 0; i < A.rows(); ++i) {
    for (std::size_t j = 0; j < A.cols(); ++j) {
      worst = std::max(worst, std::abs(A.entry(i, j) - B.entry(i, j)));
    }
  }
  return worst;
}

VerifyReport suite_anova(std::uint64_t seed) {
  VerifyReport report;
  report.suite = "anova";

  double worst_anova = 0.0;
  double worst_psi = 0.0;
  double worst_center = 0.0;
  std::uint64_t idx = 0;
  for (std::size_t k = 1; k <= 20; ++k) {
    for (int rep = 0; rep < 5; ++rep) {
      GaussianMatrix B(k, k, derive(seed, idx++));
      AnovaParts parts = anova(B);
      worst_anova = std::max(worst_anova, max_abs_diff(B, reconstruct(parts)));

      double rsum = 0.0;
      double csum = 0.0;
      for (double v : parts.row_effects) rsum += v;
      for (double v : parts.col_effects) csum += v;
      worst_center = std::max(worst_center, std::abs(rsum));
      worst_center = std::max(worst_center, std::abs(csum));
      for (std::size_t i = 0; i < k; ++i) {
        double row_res = 0.0;
        double col_res = 0.0;
        for (std::size_t j = 0; j < k; ++j) {
          row_res += parts.residual[i * k + j];
          col_res += parts.residual[j * k + i];
        }
        worst_center = std::max(worst_center, std::abs(row_res));
        worst_center = std::max(worst_center, std::abs(col_res));
      }

      worst_psi = std::max(
          worst_psi, max_abs_diff(B, psi_inverse(psi_row(B, 1000.0))));
      worst_psi = std::max(
          worst_psi, max_abs_diff(B, psi_inverse(psi_col(B, 1000.0))));
    }
  }
  report.checks.push_back(check("anova_roundtrip", worst_anova <= 1e-12,
                                "max abs error " + fmt(worst_anova)));
  report.checks.push_back(check("effects_centered", worst_center <= 1e-10,
                                "max abs sum " + fmt(worst_center)));
  report.checks.push_back(check("psi_roundtrip", worst_psi <= 1e-10,
                                "max abs error " + fmt(worst_psi)));

  {
    double worst = 0.0;
    bool built = true;
    Rng64 rng(derive(seed, 0xC0FFEEULL));
    for (int family = 0; family < 100 && built; ++family) {
      const std::size_t n = 30;
      const std::size_t k = 5;
      std::size_t count = 2 + rng.next() % 4;
      std::set<std::vector<std::size_t>> used;
      while (used.size() < count) {
        std::vector<std::size_t> pool(n);
        for (std::size_t i = 0; i < n; ++i) pool[i] = i;
        for (std::size_t i = 0; i < k; ++i) {
          std::size_t j = i + rng.next() % (n - i);
          std::swap(pool[i], pool[j]);
        }
        std::vector<std::size_t> subset(pool.begin(), pool.begin() + k);
        std::sort(subset.begin(), subset.end());
        used.insert(subset);
      }
      std::vector<std::vector<std::size_t>> sets(used.begin(), used.end());
      std::vector<std::vector<double>> L;
      try {
        L = overlap_cholesky(sets);
      } catch (const std::exception&) {
        built = false;
        break;
      }
      for (std::size_t a = 0; a < sets.size(); ++a) {
        for (std::size_t b = 0; b <= a; ++b) {
          std::vector<std::size_t> inter;
          std::set_intersection(sets[a].begin(), sets[a].end(),
                                sets[b].begin(), sets[b].end(),
                                std::back_inserter(inter));
          double sigma =
              static_cast<double>(inter.size()) / static_cast<double>(k);
          double dot = 0.0;
          for (std::size_t c = 0; c <= b; ++c) dot += L[a][c] * L[b][c];
          worst = std::max(worst, std::abs(dot - sigma));
        }
      }
    }
    report.checks.push_back(check("cholesky_identity", built && worst <= 1e-10,
                                  "max abs error " + fmt(worst)));
  }

  report.passed = std::all_of(report.checks.begin(), report.checks.end(),
                              [](const VerifyCheck& c) { return c.passed; });
  return report;
}

// ---- gumbel ----

VerifyReport suite_gumbel(std::uint64_t seed) {
  VerifyReport report;
  report.suite = "gumbel";

  const std::size_t n = 1000000;
  const std::size_t trials = 2000;
  std::vector<double> samples = sample_max_normalized(n, trials, seed);

  double mean = 0.0;
  for (double s : samples) mean += s;
  mean /= static_cast<double>(trials);
  GumbelReference ref = gumbel_reference();
  report.checks.push_back(check("mean_euler_mascheroni",
                                std::abs(mean - ref.mean) <= 0.10,
                                "sample mean " + fmt(mean)));

  double ks =
      ks_statistic(samples, [&](double w) { return ref.cdf(w); });
  report.checks.push_back(check("ks_vs_gumbel", ks <= 0.05, "ks " + fmt(ks)));

  std::size_t below = 0;
  for (double s : samples) {
    if (s <= 0.0) ++below;
  }
  double frac = static_cast<double>(below) / static_cast<double>(trials);
  report.checks.push_back(check("cdf_at_zero",
                                std::abs(frac - std::exp(-1.0)) <= 0.03,
                                "empirical " + fmt(frac)));

  report.passed = std::all_of(report.checks.begin(), report.checks.end(),
                              [](const VerifyCheck& c) { return c.passed; });
  return report;
}

// ---- oracle ----

bool same_indices(const std::vector<std::size_t>& a,
                  std::initializer_list<std::size_t> b) {
  return a == std::vector<std::size_t>(b);
}

VerifyReport suite_oracle(std::uint64_t seed) {
  VerifyReport report;
  report.suite = "oracle";

  {
    DenseMatrix M({{1, 4, 0}, {0, 2, 9}, {3, 0, 5}});
    LasResult r = run_las(M, 1);
    bool ok = same_indices(r.selection.rows, {0}) &&
              same_indices(r.selection.cols, {1}) && r.t_las == 2 &&
              r.converged && std::abs(ave(M, r.selection) - 4.0) <= 1e-15;
    report.checks.push_back(check("fixture_las", ok,
                                  "t_las " + std::to_string(r.t_las)));
  }

  {
    DenseMatrix M({{1, 0.6, 0}, {0.7, 0.9, 0}, {0, 0, 1}});
    GreedyResult r = run_greedy(M, 0.5);
    bool ok = r.m == 2 && same_indices(r.selection.rows, {0, 1}) &&
              same_indices(r.selection.cols, {0, 1});
    report.checks.push_back(
        check("fixture_greedy", ok, "m " + std::to_string(r.m)));
  }

  DenseMatrix igp_fixture(
      {{3, 1, 2, 0}, {0, 0, 0, 0}, {1, 0, 5, 1}, {4, 0, 0, 1}});
  {
    IgpResult r = run_igp(igp_fixture, 2);
    bool ok = same_indices(r.selection.rows, {0, 3}) &&
              same_indices(r.selection.cols, {0, 2}) &&
              std::abs(ave(igp_fixture, r.selection) - 2.25) <= 1e-15 &&
              r.step_sums == std::vector<double>({3, 4, 2});
    report.checks.push_back(
        check("fixture_igp", ok, "ave " + fmt(ave(igp_fixture, r.selection))));
  }

  {
    BruteResult r = brute_force(igp_fixture, 2);
    bool ok = same_indices(r.selection.rows, {0, 2}) &&
              same_indices(r.selection.cols, {0, 2}) &&
              std::abs(r.ave - 2.75) <= 1e-15;
    report.checks.push_back(check("fixture_brute", ok, "ave " + fmt(r.ave)));
  }

  {
    bool dominates = true;
    bool local = true;
    for (int inst = 0; inst < 20; ++inst) {
      GaussianMatrix M(8, 8, derive(seed, 0x0Au + inst));
      BruteResult best = brute_force(M, 2);
      LasResult las = run_las(M, 2);
      IgpResult igp = run_igp(M, 2);
      if (best.ave < ave(M, las.selection) - 1e-12 ||
          best.ave < ave(M, igp.selection) - 1e-12) {
        dominates = false;
      }
      if (!is_local_max(M, best.selection)) local = false;
    }
    report.checks.push_back(
        check("brute_dominates", dominates, "20 instances, n=8, k=2"));
    report.checks.push_back(
        check("brute_is_local_max", local, "20 instances, n=8, k=2"));
  }

  {
    bool ok = true;
    for (int inst = 0; inst < 20; ++inst) {
      GaussianMatrix M(40, 40, derive(seed, 0x1000u + inst));
      LasResult r = run_las(M, 3);
      if (!r.converged || !is_local_max(M, r.selection)) ok = false;
    }
    report.checks.push_back(
        check("las_reaches_local_max", ok, "20 instances, n=40, k=3"));
  }

  {
    bool ok = true;
    for (int inst = 0; inst < 20; ++inst) {
      GaussianMatrix M(100, 100, derive(seed, 0x2000u + inst));
      double theta = theta_n(100.0, 3);
      GreedyResult r = run_greedy(M, theta);
      if (r.m == 0) continue;
      for (std::size_t i : r.selection.rows) {
        for (std::size_t j : r.selection.cols) {
          if (!(M.entry(i, j) > theta)) ok = false;
        }
      }
    }
    report.checks.push_back(
        check("greedy_respects_threshold", ok, "20 instances, n=100"));
  }

  report.passed = std::all_of(report.checks.begin(), report.checks.end(),
                              [](const VerifyCheck& c) { return c.passed; });
  return report;
}

// ---- ogp ----

VerifyReport suite_ogp() {
  VerifyReport report;
  report.suite = "ogp";

  {
    double a1 = critical_alpha1();
    double a2 = critical_alpha2();
    bool ok = std::abs(a1 - std::sqrt(1.5)) <= 1e-12 &&
              std::abs(a2 - 5.0 * std::sqrt(2.0) / (3.0 * std::sqrt(3.0))) <=
                  1e-9;
    report.checks.push_back(check(
        "critical_alphas", ok, "alpha1 " + fmt(a1) + ", alpha2 " + fmt(a2)));
  }

  {
    bool ok = true;
    std::string got;
    const std::pair<double, std::size_t> cases[] = {
        {1.0, 1}, {1.30, 1}, {1.364, 2}, {1.40, 2}};
    for (const auto& [alpha, expected] : cases) {
      std::size_t comp = region_components(region_grid(alpha, 400));
      got += fmt(alpha) + "->" + std::to_string(comp) + " ";
      if (comp != expected) ok = false;
    }
    report.checks.push_back(check("region_components_res400", ok, got));
  }

  {
    RegionGrid grid = region_grid(1.364, 400);
    auto gap = projection_gap(grid, Axis::y1);
    bool ok = gap.has_value() && std::abs(gap->first - 0.28) <= 0.02 &&
              std::abs(gap->second - 0.40) <= 0.02;
    std::string detail =
        gap ? "gap (" + fmt(gap->first) + ", " + fmt(gap->second) + ")"
            : "no gap";
    report.checks.push_back(check("projection_gap", ok, detail));
  }

  {
    double expo = overlap_exponent_numeric(1e12, 20, 1.2, 0.5, 0.5, 0.02);
    double f = f_overlap(1.2, 0.5, 0.5);
    report.checks.push_back(check("exponent_consistency",
                                  std::abs(expo - f) <= 0.25,
                                  "exponent " + fmt(expo) + ", f " + fmt(f)));
  }

  {
    bool ok = true;
    double worst = 0.0;
    for (double alpha : {0.5, 1.0, 1.2408, 1.3, 1.36083, 1.41}) {
      auto roots = quartic_stationary_roots(alpha);
      if (roots.size() > 2) ok = false;
      for (const QuarticRoot& r : roots) {
        if (r.y < 0.0 || r.y > 1.0) ok = false;
        double q =
            ((r.y * r.y + 2.0) * r.y - 2.0 * alpha * alpha) * r.y + 1.0;
        worst = std::max(worst, std::abs(q));
      }
    }
    report.checks.push_back(check("quartic_residuals", ok && worst <= 1e-9,
                                  "max residual " + fmt(worst)));
  }

  report.passed = std::all_of(report.checks.begin(), report.checks.end(),
                              [](const VerifyCheck& c) { return c.passed; });
  return report;
}

}  // namespace

VerifyReport run_verify_suite(const std::string& suite, std::uint64_t seed,
                              unsigned threads) {
  (void)threads;  // suites are deterministic regardless of the setting
  if (suite == "tails") return suite_tails();
  if (suite == "anova") return suite_anova(seed);
  if (suite == "gumbel") return suite_gumbel(seed);
  if (suite == "oracle") return suite_oracle(seed);
  if (suite == "ogp") return suite_ogp();
  throw std::invalid_argument("unknown verify suite: " + suite);
}

}  // namespace submax
