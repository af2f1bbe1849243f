#include "submax/algorithms.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "submax/dominance.hpp"
#include "submax/theory.hpp"

namespace submax {

namespace {

// Indices of the k largest sums, ties to the smaller index, returned
// ascending. This makes the chosen index set the lexicographically
// smallest among maximizers.
std::vector<std::size_t> best_k(const std::vector<double>& sums,
                                std::size_t k) {
  std::vector<std::size_t> idx(sums.size());
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::partial_sort(idx.begin(), idx.begin() + static_cast<std::ptrdiff_t>(k),
                    idx.end(), [&sums](std::size_t a, std::size_t b) {
                      if (sums[a] != sums[b]) return sums[a] > sums[b];
                      return a < b;
                    });
  idx.resize(k);
  std::sort(idx.begin(), idx.end());
  return idx;
}

double binomial_capped(std::size_t n, std::size_t k, double cap) {
  if (k > n) return 0.0;
  double v = 1.0;
  for (std::size_t i = 1; i <= k; ++i) {
    v *= static_cast<double>(n - k + i) / static_cast<double>(i);
    if (v > cap) return cap * 2.0;
  }
  return v;
}

void enumeration_guard(std::size_t n, std::size_t k, double budget,
                       const char* who) {
  const double c = binomial_capped(n, k, 2e9);
  if (c * c > budget) {
    throw std::length_error(std::string(who) +
                            ": enumeration budget exceeded");
  }
}

}  // namespace

LasResult run_las(const Matrix& M, std::size_t k,
                  std::optional<Selection> init) {
  const std::size_t n = M.rows();
  const std::size_t m = M.cols();
  if (k == 0 || k > n || k > m) {
    throw std::domain_error("run_las: k out of range");
  }
  Selection cur;
  if (init) {
    validate_selection(M, *init);
    if (init->rows.size() != k || init->cols.size() != k) {
      throw std::invalid_argument("run_las: init must be k x k");
    }
    cur = *init;
  } else {
    cur.rows.resize(k);
    cur.cols.resize(k);
    std::iota(cur.rows.begin(), cur.rows.end(), std::size_t{0});
    std::iota(cur.cols.begin(), cur.cols.end(), std::size_t{0});
  }

  LasResult res;
  res.trace.push_back({0, cur, ave(M, cur)});

  constexpr std::size_t kStepGuard = 10'000'000;
  std::size_t step = 0;
  while (true) {
    ++step;  // column search
    std::vector<double> col_sums(m, 0.0);
    for (std::size_t i : cur.rows) {
      for (std::size_t j = 0; j < m; ++j) {
        col_sums[j] += M.entry(i, j);
      }
    }
    const auto new_cols = best_k(col_sums, k);
    const bool cols_same = (new_cols == cur.cols);
    cur.cols = new_cols;
    res.trace.push_back({step, cur, ave(M, cur)});
    if (cols_same && step >= 2) {
      res.t_las = step;
      break;
    }

    ++step;  // row search
    std::vector<double> row_sums(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
      double s = 0.0;
      for (std::size_t j : cur.cols) {
        s += M.entry(i, j);
      }
      row_sums[i] = s;
    }
    const auto new_rows = best_k(row_sums, k);
    const bool rows_same = (new_rows == cur.rows);
    cur.rows = new_rows;
    res.trace.push_back({step, cur, ave(M, cur)});
    if (rows_same) {
      res.t_las = step;
      break;
    }
    if (step > kStepGuard) {
      throw std::runtime_error("run_las: step guard exceeded");
    }
  }
  res.selection = cur;
  res.converged = true;
  return res;
}

GreedyResult run_greedy(const Matrix& M, double theta) {
  const std::size_t n = M.rows();
  const std::size_t m = M.cols();

  std::size_t i1 = n;
  for (std::size_t i = 0; i < n && i1 == n; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      if (M.entry(i, j) > theta) {
        i1 = i;
        break;
      }
    }
  }
  GreedyResult out;
  out.theta = theta;
  if (i1 == n) {
    return out;  // m = 0, empty selection
  }

  std::vector<std::size_t> picked_rows{i1};
  std::vector<std::size_t> picked_cols;
  std::vector<std::size_t> col_cand;  // adjacent to every picked row
  for (std::size_t j = 0; j < m; ++j) {
    if (M.entry(i1, j) > theta) col_cand.push_back(j);
  }
  std::vector<std::size_t> row_cand;  // adjacent to every picked column
  row_cand.reserve(n - 1);
  for (std::size_t i = 0; i < n; ++i) {
    if (i != i1) row_cand.push_back(i);
  }

  while (true) {
    // Column step; restores |cols| == |rows|.
    if (col_cand.empty()) {
      picked_rows.pop_back();
      break;
    }
    std::size_t best_j = col_cand.front();
    std::size_t best_score = 0;
    bool first = true;
    for (std::size_t j : col_cand) {
      std::size_t score = 0;
      for (std::size_t i : row_cand) {
        if (M.entry(i, j) > theta) ++score;
      }
      if (first || score > best_score) {
        best_j = j;
        best_score = score;
        first = false;
      }
    }
    picked_cols.push_back(best_j);
    {
      std::vector<std::size_t> kept;
      kept.reserve(row_cand.size());
      for (std::size_t i : row_cand) {
        if (M.entry(i, best_j) > theta) kept.push_back(i);
      }
      row_cand.swap(kept);
    }
    col_cand.erase(std::find(col_cand.begin(), col_cand.end(), best_j));
    if (row_cand.empty() || col_cand.empty()) {
      break;
    }

    // Row step.
    std::size_t best_i = row_cand.front();
    std::size_t best_score_i = 0;
    bool first_i = true;
    for (std::size_t i : row_cand) {
      std::size_t score = 0;
      for (std::size_t j : col_cand) {
        if (M.entry(i, j) > theta) ++score;
      }
      if (first_i || score > best_score_i) {
        best_i = i;
        best_score_i = score;
        first_i = false;
      }
    }
    picked_rows.push_back(best_i);
    {
      std::vector<std::size_t> kept;
      kept.reserve(col_cand.size());
      for (std::size_t j : col_cand) {
        if (M.entry(best_i, j) > theta) kept.push_back(j);
      }
      col_cand.swap(kept);
    }
    row_cand.erase(std::find(row_cand.begin(), row_cand.end(), best_i));
  }

  out.m = picked_rows.size();
  std::sort(picked_rows.begin(), picked_rows.end());
  std::sort(picked_cols.begin(), picked_cols.end());
  out.selection.rows = std::move(picked_rows);
  out.selection.cols = std::move(picked_cols);
  return out;
}

UnderTargetError::UnderTargetError(std::size_t achieved, GreedyResult partial)
    : std::runtime_error("greedy clique reached only m = " +
                         std::to_string(achieved)),
      achieved_(achieved),
      partial_(std::move(partial)) {}

GreedyResult greedy_for_k(const Matrix& M, std::size_t k) {
  if (k < 2) {
    throw std::domain_error("greedy_for_k: k must be at least 2");
  }
  const double theta = theta_n(static_cast<double>(M.rows()), k);
  GreedyResult g = run_greedy(M, theta);
  if (g.m < k) {
    throw UnderTargetError(g.m, std::move(g));
  }
  if (g.m > k) {
    g.selection.rows.resize(k);
    g.selection.cols.resize(k);
    g.m = k;
  }
  return g;
}

IgpResult run_igp(const Matrix& M, std::size_t k) {
  const std::size_t n = M.rows();
  if (M.cols() != n) {
    throw std::invalid_argument("run_igp: square matrix required");
  }
  if (k == 0) {
    throw std::domain_error("run_igp: k must be positive");
  }
  const std::size_t block = n / k;
  if (block == 0) {
    throw std::domain_error("run_igp: floor(n/k) is zero");
  }

  std::vector<std::size_t> rows{0};
  std::vector<std::size_t> cols;
  std::vector<double> step_sums;
  step_sums.reserve(2 * k - 1);

  while (cols.size() < k) {
    // Column from block P_|I|.
    const std::size_t lo = (rows.size() - 1) * block;
    std::size_t best_j = lo;
    double best_sum = 0.0;
    bool first = true;
    for (std::size_t j = lo; j < lo + block; ++j) {
      double s = 0.0;
      for (std::size_t i : rows) s += M.entry(i, j);
      if (first || s > best_sum) {
        best_j = j;
        best_sum = s;
        first = false;
      }
    }
    cols.push_back(best_j);
    step_sums.push_back(best_sum);

    if (rows.size() < k) {
      // Row from block P_{|I|+1}.
      const std::size_t lo2 = rows.size() * block;
      std::size_t best_i = lo2;
      double best_sum_i = 0.0;
      bool first_i = true;
      for (std::size_t i = lo2; i < lo2 + block; ++i) {
        double s = 0.0;
        for (std::size_t j : cols) s += M.entry(i, j);
        if (first_i || s > best_sum_i) {
          best_i = i;
          best_sum_i = s;
          first_i = false;
        }
      }
      rows.push_back(best_i);
      step_sums.push_back(best_sum_i);
    }
  }

  IgpResult res;
  res.selection.rows = std::move(rows);
  res.selection.cols = std::move(cols);
  res.step_sums = std::move(step_sums);
  return res;
}

BruteResult brute_force(const Matrix& M, std::size_t k) {
  const std::size_t n = M.rows();
  const std::size_t m = M.cols();
  if (k == 0 || k > n || k > m) {
    throw std::domain_error("brute_force: k out of range");
  }
  enumeration_guard(n, k, 1e8, "brute_force");

  BruteResult best;
  bool have = false;
  std::vector<std::size_t> comb(k);
  std::iota(comb.begin(), comb.end(), std::size_t{0});
  std::vector<double> col_sums(m);
  while (true) {
    std::fill(col_sums.begin(), col_sums.end(), 0.0);
    for (std::size_t i : comb) {
      for (std::size_t j = 0; j < m; ++j) {
        col_sums[j] += M.entry(i, j);
      }
    }
    const auto top = best_k(col_sums, k);
    double total = 0.0;
    for (std::size_t j : top) total += col_sums[j];
    const double cand = total / (static_cast<double>(k) * static_cast<double>(k));
    if (!have || cand > best.ave) {
      best.ave = cand;
      best.selection.rows = comb;
      best.selection.cols = top;
      have = true;
    }

    // next k-combination of [0, n)
    std::size_t pos = k;
    while (pos > 0 && comb[pos - 1] == n - k + pos - 1) --pos;
    if (pos == 0) break;
    ++comb[pos - 1];
    for (std::size_t q = pos; q < k; ++q) comb[q] = comb[q - 1] + 1;
  }
  return best;
}

std::vector<Selection> enumerate_local_maxima(const Matrix& M, std::size_t k,
                                              std::uint64_t budget) {
  const std::size_t n = M.rows();
  const std::size_t m = M.cols();
  if (k == 0 || k > n || k > m) {
    throw std::domain_error("enumerate_local_maxima: k out of range");
  }
  enumeration_guard(n, k, static_cast<double>(budget),
                    "enumerate_local_maxima");

  std::vector<Selection> found;
  std::vector<std::size_t> comb(k);
  std::iota(comb.begin(), comb.end(), std::size_t{0});
  std::vector<double> col_sums(m);
  while (true) {
    std::fill(col_sums.begin(), col_sums.end(), 0.0);
    for (std::size_t i : comb) {
      for (std::size_t j = 0; j < m; ++j) {
        col_sums[j] += M.entry(i, j);
      }
    }
    Selection cand;
    cand.rows = comb;
    cand.cols = best_k(col_sums, k);
    if (is_local_max(M, cand)) {
      found.push_back(std::move(cand));
    }

    std::size_t pos = k;
    while (pos > 0 && comb[pos - 1] == n - k + pos - 1) --pos;
    if (pos == 0) break;
    ++comb[pos - 1];
    for (std::size_t q = pos; q < k; ++q) comb[q] = comb[q - 1] + 1;
  }
  return found;
}

}  // namespace submax
