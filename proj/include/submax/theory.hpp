#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "submax/normal.hpp"

namespace submax {

// Centering constant for the maximum of n standard normals:
// sqrt(2 log n) - log(4 pi log n) / (2 sqrt(2 log n)). Accepts real n >= 3.
double b_n(double n);

// Threshold with upper tail probability n^{-1/k}.
double theta_n(double n, std::size_t k);

enum class Alg { las, greedy, igp, brute };

// Asymptotic constant-level value of each algorithm, or its finite-n
// corrected form: las -> b_n/sqrt(k), greedy -> theta_n, igp -> the
// step-sum estimate (sum_{r<=k} sqrt(r) + sum_{r<=k-1} sqrt(r)) *
// b_{floor(n/k)} / k^2. The global optimum has no finite form.
double predicted_ave(Alg alg, double n, std::size_t k, bool finite_correction);

// f(alpha, y1, y2) = 4 - y1 - y2 - 2 alpha^2 / (1 + y1 y2).
double f_overlap(double alpha, double y1, double y2);

struct QuarticRoot {
  double y;
  int multiplicity;
};

// Real roots in [0,1] of y^4 + 2 y^2 - 2 alpha^2 y + 1, the stationary
// points of y -> f(alpha, y, y). The quartic is strictly convex, so there
// are at most two; a double root is reported once with multiplicity 2.
std::vector<QuarticRoot> quartic_stationary_roots(double alpha);

struct CriticalAlphas {
  double alpha1;
  double alpha2;
};

double critical_alpha1();
double critical_alpha2();

struct RegionGrid {
  double alpha = 0.0;
  std::size_t resolution = 0;
  std::vector<double> f_values;  // res*res row-major, index i along y1
  std::vector<std::uint8_t> mask;

  double f_at(std::size_t i, std::size_t j) const {
    return f_values[i * resolution + j];
  }
  bool mask_at(std::size_t i, std::size_t j) const {
    return mask[i * resolution + j] != 0;
  }
};

// f evaluated at cell centers ((i+0.5)/res, (j+0.5)/res).
RegionGrid region_grid(double alpha, std::size_t resolution);

// Number of 4-connected components of the mask.
std::size_t region_components(const RegionGrid& grid);

enum class Axis { y1, y2 };

// Widest empty interval between the projected occupied intervals, in cell
// center coordinates, if the projection is disconnected.
std::optional<std::pair<double, double>> projection_gap(const RegionGrid& grid,
                                                        Axis axis);

// -2 alpha^2 k^2 / (k^2 + k1 k2).
double overlap_prob_exponent_closed(double alpha, std::size_t k,
                                    std::size_t k1, std::size_t k2);

// log E|O(alpha, y1, y2, delta)| / (k log n): log-gamma multinomials plus
// the pair probability P(X+Y1, X+Y2 in the value window) by adaptive
// quadrature over the shared component X, all accumulated in log space.
double overlap_exponent_numeric(double n, std::size_t k, double alpha,
                                double y1, double y2, double delta);

struct GumbelReference {
  double mean;
  double variance;
  double cdf(double w) const;
};

GumbelReference gumbel_reference();

}  // namespace submax
