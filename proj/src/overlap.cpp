#include "submax/overlap.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace submax {

namespace {

std::size_t intersection_size(const std::vector<std::size_t>& a,
                              const std::vector<std::size_t>& b) {
  std::size_t count = 0;
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() && ib != b.end()) {
    if (*ia < *ib) {
      ++ia;
    } else if (*ib < *ia) {
      ++ib;
    } else {
      ++count;
      ++ia;
      ++ib;
    }
  }
  return count;
}

}  // namespace

std::pair<double, double> overlap(const Selection& S1, const Selection& S2,
                                  std::size_t k) {
  if (S1.rows.size() != k || S1.cols.size() != k || S2.rows.size() != k ||
      S2.cols.size() != k) {
    throw std::invalid_argument("overlap: selections must be k x k");
  }
  const double kk = static_cast<double>(k);
  return {intersection_size(S1.rows, S2.rows) / kk,
          intersection_size(S1.cols, S2.cols) / kk};
}

std::vector<std::vector<double>> overlap_cholesky(
    const std::vector<std::vector<std::size_t>>& index_sets) {
  const std::size_t r = index_sets.size();
  if (r == 0) {
    throw std::invalid_argument("overlap_cholesky: no index sets");
  }
  const std::size_t k = index_sets.front().size();
  if (k == 0) {
    throw std::invalid_argument("overlap_cholesky: empty subsets");
  }
  std::vector<std::vector<std::size_t>> sorted(index_sets);
  for (auto& s : sorted) {
    if (s.size() != k) {
      throw std::invalid_argument("overlap_cholesky: subsets of unequal size");
    }
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end()) {
      throw std::invalid_argument("overlap_cholesky: duplicate index");
    }
  }

  std::vector<std::vector<double>> sigma(r, std::vector<double>(r));
  for (std::size_t a = 0; a < r; ++a) {
    for (std::size_t b = 0; b <= a; ++b) {
      const double v =
          static_cast<double>(intersection_size(sorted[a], sorted[b])) /
          static_cast<double>(k);
      sigma[a][b] = v;
      sigma[b][a] = v;
    }
  }

  std::vector<std::vector<double>> L(r, std::vector<double>(r, 0.0));
  for (std::size_t a = 0; a < r; ++a) {
    for (std::size_t b = 0; b <= a; ++b) {
      double s = sigma[a][b];
      for (std::size_t c = 0; c < b; ++c) {
        s -= L[a][c] * L[b][c];
      }
      if (a == b) {
        if (s <= 1e-12) {
          throw std::runtime_error(
              "overlap_cholesky: covariance not positive definite");
        }
        L[a][a] = std::sqrt(s);
      } else {
        L[a][b] = s / L[b][b];
      }
    }
  }
  return L;
}

}  // namespace submax
