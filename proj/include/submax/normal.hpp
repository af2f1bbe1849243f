#pragma once

#include <cstdint>

namespace submax {

struct TailBounds {
  double lower;
  double upper;
};

// Inverse standard normal CDF (AS241, PPND16). Throws std::domain_error
// unless 0 < p < 1.
double normal_quantile(double p);

// Standard normal CDF.
double normal_cdf(double x);

// Upper tail Q(u) = 1 - Phi(u).
double normal_tail(double u);

// log Q(u), finite for every finite u (the value itself underflows near
// u = 38.6).
double log_normal_tail(double u);

// Classical sandwich phi(u)/u * (1 - 2/u^2) <= Q(u) <= phi(u)/u.
TailBounds tail_bounds(double u);

// Phi^{-1}((u + 0.5) / 2^64). Evaluated from whichever half of the unit
// interval is below 1/2 so the argument never rounds to 1.0.
double uniform_to_normal(std::uint64_t u);

}  // namespace submax
