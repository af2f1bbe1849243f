#include "submax/normal.hpp"

#include <cmath>
#include <stdexcept>

namespace submax {

namespace {

constexpr double kSqrt2 = 1.4142135623730951;
constexpr double kLogSqrt2Pi = 0.9189385332046727;

// AS241 (Wichura, PPND16) rational approximations. Coefficients as
// published; accurate to roughly 1 part in 1e16.
double ppnd16(double p) {
  const double q = p - 0.5;
  if (std::fabs(q) <= 0.425) {
    const double r = 0.180625 - q * q;
    return q *
           (((((((r * 2509.0809287301226727 + 33430.575583588128105) * r +
                 67265.770927008700853) *
                    r +
                45921.953931549871457) *
                   r +
               13731.693765509461125) *
                  r +
              1971.5909503065514427) *
                 r +
             133.14166789178437745) *
                r +
            3.387132872796366608) /
           (((((((r * 5226.495278852854561 + 28729.085735721942674) * r +
                 39307.89580009271061) *
                    r +
                21213.794301586595867) *
                   r +
               5394.1960214247511077) *
                  r +
              687.1870074920579083) *
                 r +
             42.313330701600911252) *
                r +
            1.0);
  }
  double r = (q < 0) ? p : 1.0 - p;
  r = std::sqrt(-std::log(r));
  double val;
  if (r <= 5.0) {
    r -= 1.6;
    val = (((((((r * 7.7454501427834140764e-4 + 0.0227238449892691845833) * r +
                0.24178072517745061177) *
                   r +
               1.27045825245236838258) *
                  r +
              3.64784832476320460504) *
                 r +
             5.7694972214606914055) *
                r +
            4.6303378461565452959) *
               r +
           1.42343711074968357734) /
          (((((((r * 1.05075007164441684324e-9 + 5.475938084995344946e-4) * r +
                0.0151986665636164571966) *
                   r +
               0.14810397642748007459) *
                  r +
              0.68976733498510000455) *
                 r +
             1.6763848301838038494) *
                r +
            2.05319162663775882187) *
               r +
           1.0);
  } else {
    r -= 5.0;
    val = (((((((r * 2.01033439929228813265e-7 + 2.71155556874348757815e-5) *
                    r +
                0.0012426609473880784386) *
                   r +
               0.026532189526576123093) *
                  r +
              0.29656057182850489123) *
                 r +
             1.7848265399172913358) *
                r +
            5.4637849111641143699) *
               r +
           6.6579046435011037772) /
          (((((((r * 2.04426310338993978564e-15 + 1.4215117583164458887e-7) *
                    r +
                1.8463183175100546818e-5) *
                   r +
               7.868691311456132591e-4) *
                  r +
              0.0148753612908506148525) *
                 r +
             0.13692988092273580531) *
                r +
            0.59983220655588793769) *
               r +
           1.0);
  }
  return (q < 0) ? -val : val;
}

// Asymptotic tail series 1 - 1/u^2 + 3/u^4 - 15/u^6 + ... truncated where
// terms stop improving; used only for u large enough that six terms reach
// full double precision.
double log_tail_asymptotic(double u) {
  const double w = 1.0 / (u * u);
  double term = 1.0;
  double series = 0.0;
  for (int j = 1; j <= 8; ++j) {
    term *= -(2.0 * j - 1.0) * w;
    series += term;
  }
  return -0.5 * u * u - std::log(u) - kLogSqrt2Pi + std::log1p(series);
}

}  // namespace

double normal_quantile(double p) {
  if (!(p > 0.0 && p < 1.0)) {
    throw std::domain_error("normal_quantile: p must lie in (0,1)");
  }
  return ppnd16(p);
}

double normal_cdf(double x) { return 0.5 * std::erfc(-x / kSqrt2); }

double normal_tail(double u) {
  if (u > 36.0) {
    return std::exp(log_tail_asymptotic(u));
  }
  return 0.5 * std::erfc(u / kSqrt2);
}

double log_normal_tail(double u) {
  if (u > 36.0) {
    return log_tail_asymptotic(u);
  }
  if (u < -36.0) {
    return std::log1p(-std::exp(log_tail_asymptotic(-u)));
  }
  return std::log(0.5 * std::erfc(u / kSqrt2));
}

TailBounds tail_bounds(double u) {
  if (u <= 0.0) {
    throw std::domain_error("tail_bounds: u must be positive");
  }
  const double envelope =
      std::exp(-0.5 * u * u) / (u * std::sqrt(2.0 * M_PI));
  return TailBounds{envelope * (1.0 - 2.0 / (u * u)), envelope};
}

double uniform_to_normal(std::uint64_t u) {
  const bool upper_half = (u >> 63) != 0;
  const std::uint64_t v = upper_half ? ~u : u;
  const double p = (static_cast<double>(v) + 0.5) * 0x1p-64;
  const double z = ppnd16(p);
  return upper_half ? -z : z;
}

}  // namespace submax
