#pragma once

#include <cstdint>
#include <string>

#include "submax/serialize.hpp"

namespace submax {

// Built-in self-check suites behind `submax verify`. Deterministic for a
// fixed seed and independent of the thread setting.
//   tails  - tail/quantile/cdf sandwich and round-trip checks
//   anova  - decomposition round trips and the overlap Cholesky identity
//   gumbel - extreme-value law of the normalized maximum
//   oracle - documented fixtures plus brute-force dominance
//   ogp    - critical alphas, region topology, exponent consistency
VerifyReport run_verify_suite(const std::string& suite, std::uint64_t seed,
                              unsigned threads);

}  // namespace submax
