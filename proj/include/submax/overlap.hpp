#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "submax/matrix.hpp"

namespace submax {

// Normalized shared-row and shared-column counts of two k x k selections.
std::pair<double, double> overlap(const Selection& S1, const Selection& S2,
                                  std::size_t k);

// Cholesky factor of the covariance Sigma_ab = |I_a intersect I_b| / k of
// normalized column sums over row sets I_a. Throws std::runtime_error if
// Sigma is not numerically positive definite (e.g. duplicate subsets).
std::vector<std::vector<double>> overlap_cholesky(
    const std::vector<std::vector<std::size_t>>& index_sets);

}  // namespace submax
