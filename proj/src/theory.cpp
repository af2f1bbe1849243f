#include "submax/theory.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <deque>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace submax {

namespace {

constexpr double kPi = 3.14159265358979323846;

double log_phi(double x) { return -0.5 * x * x - 0.5 * std::log(2.0 * kPi); }

// log(Phi(b) - Phi(a)) for a < b, stable in both tails.
double log_prob_interval(double a, double b) {
  if (!(a < b)) return -std::numeric_limits<double>::infinity();
  if (a >= 0.0) {
    double la = log_normal_tail(a);
    double lb = log_normal_tail(b);
    double d = lb - la;  // < 0
    return la + std::log(-std::expm1(d));
  }
  if (b <= 0.0) return log_prob_interval(-b, -a);
  // Interval straddles zero, mass is not small.
  double miss = normal_tail(b) + normal_tail(-a);
  return std::log1p(-miss);
}

double quartic(double alpha, double y) {
  return ((y * y + 2.0) * y - 2.0 * alpha * alpha) * y + 1.0;
}

double quartic_deriv(double alpha, double y) {
  return 4.0 * y * y * y + 4.0 * y - 2.0 * alpha * alpha;
}

// Minimizer of the (strictly convex) quartic: the unique real solution of
// 2 y^3 + 2 y = alpha^2.
double quartic_min_point(double alpha) {
  double a2 = alpha * alpha;
  double lo = 0.0;
  double hi = std::max(1.0, 0.5 * a2);
  for (int it = 0; it < 200; ++it) {
    double mid = 0.5 * (lo + hi);
    if (2.0 * mid * mid * mid + 2.0 * mid < a2) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

double bisect_quartic_root(double alpha, double lo, double hi) {
  // Precondition: sign change between lo and hi.
  double flo = quartic(alpha, lo);
  for (int it = 0; it < 200; ++it) {
    double mid = 0.5 * (lo + hi);
    double fm = quartic(alpha, mid);
    if ((flo <= 0.0) == (fm <= 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  double y = 0.5 * (lo + hi);
  for (int it = 0; it < 4; ++it) {
    double d = quartic_deriv(alpha, y);
    if (d == 0.0) break;
    double step = quartic(alpha, y) / d;
    double next = y - step;
    if (next < 0.0 || !std::isfinite(next)) break;
    y = next;
  }
  return y;
}

}  // namespace

double b_n(double n) {
  if (!(n >= 3.0)) {
    throw std::domain_error("b_n: n must be at least 3");
  }
  double ln = std::log(n);
  double s = std::sqrt(2.0 * ln);
  return s - std::log(4.0 * kPi * ln) / (2.0 * s);
}

double theta_n(double n, std::size_t k) {
  if (!(n >= 2.0)) {
    throw std::domain_error("theta_n: n must be at least 2");
  }
  if (k == 0) {
    throw std::domain_error("theta_n: k must be positive");
  }
  // Upper tail probability n^{-1/k}; theta is its standard normal quantile.
  double p = std::exp(-std::log(n) / static_cast<double>(k));
  return -normal_quantile(p);
}

double predicted_ave(Alg alg, double n, std::size_t k,
                     bool finite_correction) {
  if (!(n >= 3.0)) {
    throw std::domain_error("predicted_ave: n must be at least 3");
  }
  if (k == 0 || static_cast<double>(k) > n) {
    throw std::domain_error("predicted_ave: need 1 <= k <= n");
  }
  double kd = static_cast<double>(k);
  double base = std::sqrt(2.0 * std::log(n) / kd);
  if (!finite_correction) {
    switch (alg) {
      case Alg::las:
      case Alg::greedy:
        return base;
      case Alg::igp:
        return (4.0 / 3.0) * base;
      case Alg::brute:
        return 2.0 * std::sqrt(std::log(n) / kd);
    }
    throw std::invalid_argument("predicted_ave: unknown algorithm");
  }
  switch (alg) {
    case Alg::las:
      return b_n(n) / std::sqrt(kd);
    case Alg::greedy:
      return theta_n(n, k);
    case Alg::igp: {
      double ssum = 0.0;
      for (std::size_t r = 1; r <= k; ++r) {
        ssum += std::sqrt(static_cast<double>(r));
        if (r < k) ssum += std::sqrt(static_cast<double>(r));
      }
      double block = std::floor(n / kd);
      return ssum * b_n(block) / (kd * kd);
    }
    case Alg::brute:
      return 2.0 * std::sqrt(std::log(n) / kd);
  }
  throw std::invalid_argument("predicted_ave: unknown algorithm");
}

double f_overlap(double alpha, double y1, double y2) {
  if (!(alpha >= 0.0)) {
    throw std::domain_error("f_overlap: alpha must be nonnegative");
  }
  if (!(y1 >= 0.0 && y1 <= 1.0 && y2 >= 0.0 && y2 <= 1.0)) {
    throw std::domain_error("f_overlap: overlaps must lie in [0, 1]");
  }
  return 4.0 - y1 - y2 - 2.0 * alpha * alpha / (1.0 + y1 * y2);
}

std::vector<QuarticRoot> quartic_stationary_roots(double alpha) {
  if (!(alpha >= 0.0)) {
    throw std::domain_error("quartic_stationary_roots: alpha nonnegative");
  }
  std::vector<QuarticRoot> roots;
  double y0 = quartic_min_point(alpha);
  double q0 = quartic(alpha, y0);
  double tol = 1e-13 * std::max(1.0, alpha * alpha);
  if (q0 > tol) return roots;  // no real roots
  if (q0 >= -tol) {
    if (y0 <= 1.0 + 1e-12) {
      roots.push_back({std::min(y0, 1.0), 2});
    }
    return roots;
  }
  // Two simple roots bracketing the minimum. q(0) = 1 > 0 and q -> +inf.
  double lo = bisect_quartic_root(alpha, 0.0, y0);
  double hi_bound = std::max(1.0, 2.0 * y0);
  while (quartic(alpha, hi_bound) <= 0.0) hi_bound *= 2.0;
  double hi = bisect_quartic_root(alpha, y0, hi_bound);
  if (lo <= 1.0 + 1e-12) roots.push_back({std::min(lo, 1.0), 1});
  if (hi <= 1.0 + 1e-12) roots.push_back({std::min(hi, 1.0), 1});
  return roots;
}

double critical_alpha1() {
  // Defined by the corner condition f(alpha, 1, 0) = 3 - 2 alpha^2 = 0,
  // with the diagonal still free of stationary points at that alpha.
  double a1 = std::sqrt(1.5);
  if (std::abs(f_overlap(a1, 1.0, 0.0)) > 1e-12 ||
      !quartic_stationary_roots(a1).empty()) {
    throw std::runtime_error("critical_alpha1: boundary conditions violated");
  }
  return a1;
}

double critical_alpha2() {
  // f restricted to the diagonal has its local minimum at the smaller
  // stationary root; alpha2 is where that minimum value crosses zero.
  auto diag_min_value = [](double alpha) {
    auto roots = quartic_stationary_roots(alpha);
    if (roots.empty()) return 1.0;  // no interior minimum, region connected
    return f_overlap(alpha, roots.front().y, roots.front().y);
  };
  double lo = critical_alpha1();
  double hi = std::sqrt(2.0);
  if (!(diag_min_value(lo) > 0.0) || !(diag_min_value(hi) < 0.0)) {
    throw std::runtime_error("critical_alpha2: bracket failed");
  }
  for (int it = 0; it < 100; ++it) {
    double mid = 0.5 * (lo + hi);
    if (diag_min_value(mid) > 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  double a2 = 0.5 * (lo + hi);
  double closed = 5.0 * std::sqrt(2.0) / (3.0 * std::sqrt(3.0));
  if (std::abs(a2 - closed) > 1e-8) {
    throw std::runtime_error("critical_alpha2: disagrees with closed form");
  }
  return a2;
}

RegionGrid region_grid(double alpha, std::size_t resolution) {
  if (resolution < 16) {
    throw std::invalid_argument("region_grid: resolution must be >= 16");
  }
  if (!(alpha >= 0.0)) {
    throw std::domain_error("region_grid: alpha must be nonnegative");
  }
  RegionGrid g;
  g.alpha = alpha;
  g.resolution = resolution;
  g.f_values.resize(resolution * resolution);
  g.mask.resize(resolution * resolution);
  for (std::size_t i = 0; i < resolution; ++i) {
    double y1 = (static_cast<double>(i) + 0.5) / static_cast<double>(resolution);
    for (std::size_t j = 0; j < resolution; ++j) {
      double y2 =
          (static_cast<double>(j) + 0.5) / static_cast<double>(resolution);
      double v = f_overlap(alpha, y1, y2);
      g.f_values[i * resolution + j] = v;
      g.mask[i * resolution + j] = v >= 0.0 ? 1 : 0;
    }
  }
  return g;
}

std::size_t region_components(const RegionGrid& grid) {
  std::size_t res = grid.resolution;
  std::vector<std::uint8_t> seen(res * res, 0);
  std::size_t components = 0;
  std::deque<std::size_t> queue;
  for (std::size_t start = 0; start < res * res; ++start) {
    if (grid.mask[start] == 0 || seen[start]) continue;
    ++components;
    seen[start] = 1;
    queue.push_back(start);
    while (!queue.empty()) {
      std::size_t cur = queue.front();
      queue.pop_front();
      std::size_t i = cur / res;
      std::size_t j = cur % res;
      auto visit = [&](std::size_t ni, std::size_t nj) {
        std::size_t idx = ni * res + nj;
        if (grid.mask[idx] != 0 && !seen[idx]) {
          seen[idx] = 1;
          queue.push_back(idx);
        }
      };
      if (i > 0) visit(i - 1, j);
      if (i + 1 < res) visit(i + 1, j);
      if (j > 0) visit(i, j - 1);
      if (j + 1 < res) visit(i, j + 1);
    }
  }
  return components;
}

std::optional<std::pair<double, double>> projection_gap(const RegionGrid& grid,
                                                        Axis axis) {
  std::size_t res = grid.resolution;
  std::vector<std::uint8_t> occupied(res, 0);
  for (std::size_t i = 0; i < res; ++i) {
    for (std::size_t j = 0; j < res; ++j) {
      if (grid.mask[i * res + j] != 0) {
        occupied[axis == Axis::y1 ? i : j] = 1;
      }
    }
  }
  std::size_t best_lo = 0;
  std::size_t best_hi = 0;
  std::size_t best_len = 0;
  std::size_t prev = res;  // sentinel: no occupied cell seen yet
  for (std::size_t idx = 0; idx < res; ++idx) {
    if (!occupied[idx]) continue;
    if (prev != res && idx - prev > 1 && idx - prev > best_len) {
      best_len = idx - prev;
      best_lo = prev;
      best_hi = idx;
    }
    prev = idx;
  }
  if (best_len == 0) return std::nullopt;
  auto center = [&](std::size_t idx) {
    return (static_cast<double>(idx) + 0.5) / static_cast<double>(res);
  };
  return std::make_pair(center(best_lo), center(best_hi));
}

double overlap_prob_exponent_closed(double alpha, std::size_t k,
                                    std::size_t k1, std::size_t k2) {
  if (!(alpha >= 0.0)) {
    throw std::domain_error(
        "overlap_prob_exponent_closed: alpha must be nonnegative");
  }
  if (k == 0) {
    throw std::domain_error("overlap_prob_exponent_closed: k must be >= 1");
  }
  if (k1 > k || k2 > k) {
    throw std::domain_error("overlap_prob_exponent_closed: overlaps exceed k");
  }
  double kd = static_cast<double>(k);
  double num = -2.0 * alpha * alpha * kd * kd;
  return num / (kd * kd + static_cast<double>(k1) * static_cast<double>(k2));
}

namespace {

// log of the number of ordered (row or column) choices with overlap j:
// n! / ((k-j)! j! (k-j)! (n-2k+j)!), with real n. The n-dependent factor
// n!/(n-(2k-j))! is a short falling product, accumulated term by term:
// lgamma differences of two ~n log n sized values lose ~ulp(n log n)
// absolutely, which at n ~ 1e12 already pollutes the exponent.
double log_pair_count(double n, std::size_t k, std::size_t j) {
  double kd = static_cast<double>(k);
  double jd = static_cast<double>(j);
  if (n - 2.0 * kd + jd < 0.0) {
    return -std::numeric_limits<double>::infinity();
  }
  double falling = 0.0;
  for (std::size_t i = 0; i < 2 * k - j; ++i) {
    falling += std::log(n - static_cast<double>(i));
  }
  return falling - std::lgamma(jd + 1.0) -
         2.0 * std::lgamma(kd - jd + 1.0);
}

struct PairWindowProblem {
  double lo;       // window lower bound on the matrix sum
  double hi;       // window upper bound
  double sigma_x;  // shared component, sqrt(k1 k2)
  double sigma_y;  // independent component, sqrt(k^2 - k1 k2)

  // log integrand of the two-sum window probability at shared value x.
  double log_g(double x) const {
    double a = (lo - x) / sigma_y;
    double b = (hi - x) / sigma_y;
    return log_phi(x / sigma_x) - std::log(sigma_x) +
           2.0 * log_prob_interval(a, b);
  }
};

double adaptive_simpson(const PairWindowProblem& prob, double shift, double a,
                        double fa, double m, double fm, double b, double fb,
                        double whole, double tol, int depth) {
  double lm = 0.5 * (a + m);
  double rm = 0.5 * (m + b);
  double flm = std::exp(prob.log_g(lm) - shift);
  double frm = std::exp(prob.log_g(rm) - shift);
  double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  if (depth <= 0 || std::abs(left + right - whole) <= 15.0 * tol) {
    return left + right + (left + right - whole) / 15.0;
  }
  return adaptive_simpson(prob, shift, a, fa, lm, flm, m, fm, left,
                          0.5 * tol, depth - 1) +
         adaptive_simpson(prob, shift, m, fm, rm, frm, b, fb, right,
                          0.5 * tol, depth - 1);
}

// log P(X+Y1 in [lo,hi], X+Y2 in [lo,hi]) where X ~ N(0, k1 k2) is shared
// and Y1, Y2 ~ N(0, k^2 - k1 k2) are independent.
double log_pair_window_prob(double lo, double hi, std::size_t k,
                            std::size_t k1, std::size_t k2) {
  double kd = static_cast<double>(k);
  double s = static_cast<double>(k1) * static_cast<double>(k2);
  if (s == 0.0) {
    return 2.0 * log_prob_interval(lo / kd, hi / kd);
  }
  if (s == kd * kd) {
    return log_prob_interval(lo / kd, hi / kd);
  }
  PairWindowProblem prob;
  prob.lo = lo;
  prob.hi = hi;
  prob.sigma_x = std::sqrt(s);
  prob.sigma_y = std::sqrt(kd * kd - s);

  // The measure factor peaks once the window is centered; the density pulls
  // toward zero, so the mode of log_g sits between them. Ternary search
  // works because both pieces are concave in x.
  double mid_window = 0.5 * (lo + hi);
  double left = std::min(0.0, mid_window);
  double right = std::max(0.0, mid_window);
  for (int it = 0; it < 300; ++it) {
    double m1 = left + (right - left) / 3.0;
    double m2 = right - (right - left) / 3.0;
    if (prob.log_g(m1) < prob.log_g(m2)) {
      left = m1;
    } else {
      right = m2;
    }
  }
  double xstar = 0.5 * (left + right);
  double gstar = prob.log_g(xstar);

  double h = std::max(1e-4 * prob.sigma_x, 1e-7 * (std::abs(xstar) + 1.0));
  double second =
      (prob.log_g(xstar + h) - 2.0 * gstar + prob.log_g(xstar - h)) / (h * h);
  double sigma_hat =
      (second < 0.0 && std::isfinite(second)) ? 1.0 / std::sqrt(-second)
                                              : prob.sigma_x;

  double half = 12.0 * sigma_hat;
  for (int attempt = 0; attempt < 40; ++attempt) {
    double drop_lo = gstar - prob.log_g(xstar - half);
    double drop_hi = gstar - prob.log_g(xstar + half);
    if (drop_lo > 25.0 && drop_hi > 25.0) break;
    half *= 2.0;
    if (attempt == 39) {
      std::ostringstream msg;
      msg << "log_pair_window_prob: integrand fails to decay (k=" << k
          << ", k1=" << k1 << ", k2=" << k2 << ")";
      throw std::runtime_error(msg.str());
    }
  }

  double a = xstar - half;
  double b = xstar + half;
  double fa = std::exp(prob.log_g(a) - gstar);
  double fb = std::exp(prob.log_g(b) - gstar);
  double fm = 1.0;
  double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  double integral = adaptive_simpson(prob, gstar, a, fa, xstar, fm, b, fb,
                                     whole, 1e-10, 40);
  if (!(integral > 0.0) || !std::isfinite(integral)) {
    std::ostringstream msg;
    msg << "log_pair_window_prob: quadrature failed (k=" << k << ", k1=" << k1
        << ", k2=" << k2 << ", integral=" << integral << ")";
    throw std::runtime_error(msg.str());
  }
  return gstar + std::log(integral);
}

}  // namespace

double overlap_exponent_numeric(double n, std::size_t k, double alpha,
                                double y1, double y2, double delta) {
  if (!(n >= 3.0)) {
    throw std::domain_error("overlap_exponent_numeric: n must be >= 3");
  }
  if (k < 2) {
    throw std::domain_error("overlap_exponent_numeric: k must be >= 2");
  }
  if (!(alpha > 0.0)) {
    throw std::domain_error("overlap_exponent_numeric: alpha must be > 0");
  }
  if (!(y1 >= 0.0 && y1 <= 1.0 && y2 >= 0.0 && y2 <= 1.0)) {
    throw std::domain_error("overlap_exponent_numeric: overlaps in [0, 1]");
  }
  if (!(delta > 0.0 && delta < alpha)) {
    throw std::domain_error("overlap_exponent_numeric: need 0 < delta < alpha");
  }
  double kd = static_cast<double>(k);
  double scale = std::pow(kd, 1.5) * std::sqrt(2.0 * std::log(n));
  double lo = (alpha - delta) * scale;
  double hi = (alpha + delta) * scale;

  auto index_window = [&](double y) {
    auto lo_i = static_cast<long long>(std::ceil((y - delta) * kd - 1e-9));
    auto hi_i = static_cast<long long>(std::floor((y + delta) * kd + 1e-9));
    lo_i = std::max(lo_i, 0LL);
    hi_i = std::min(hi_i, static_cast<long long>(k));
    return std::make_pair(lo_i, hi_i);
  };
  auto [r_lo, r_hi] = index_window(y1);
  auto [c_lo, c_hi] = index_window(y2);
  if (r_lo > r_hi || c_lo > c_hi) {
    throw std::domain_error(
        "overlap_exponent_numeric: empty overlap index window");
  }

  std::vector<double> log_terms;
  for (long long r = r_lo; r <= r_hi; ++r) {
    double row_count = log_pair_count(n, k, static_cast<std::size_t>(r));
    if (!std::isfinite(row_count)) continue;
    for (long long c = c_lo; c <= c_hi; ++c) {
      double col_count = log_pair_count(n, k, static_cast<std::size_t>(c));
      if (!std::isfinite(col_count)) continue;
      double lp = log_pair_window_prob(lo, hi, k, static_cast<std::size_t>(r),
                                       static_cast<std::size_t>(c));
      log_terms.push_back(row_count + col_count + lp);
    }
  }
  if (log_terms.empty()) {
    throw std::runtime_error("overlap_exponent_numeric: no admissible terms");
  }
  double peak = *std::max_element(log_terms.begin(), log_terms.end());
  double acc = 0.0;
  for (double t : log_terms) acc += std::exp(t - peak);
  double log_expected = peak + std::log(acc);
  return log_expected / (kd * std::log(n));
}

double GumbelReference::cdf(double w) const { return std::exp(-std::exp(-w)); }

GumbelReference gumbel_reference() {
  GumbelReference g;
  g.mean = 0.57721566490153286;
  g.variance = kPi * kPi / 6.0;
  return g;
}

}  // namespace submax
