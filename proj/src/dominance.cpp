#include "submax/dominance.hpp"

#include <limits>

namespace submax {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

double row_sum(const Matrix& M, std::size_t i,
               const std::vector<std::size_t>& cols) {
  double s = 0.0;
  for (std::size_t j : cols) s += M.entry(i, j);
  return s;
}

double col_sum(const Matrix& M, std::size_t j,
               const std::vector<std::size_t>& rows) {
  double s = 0.0;
  for (std::size_t i : rows) s += M.entry(i, j);
  return s;
}

}  // namespace

bool is_row_dominant(const Matrix& M, const Selection& S) {
  validate_selection(M, S);
  double min_selected = std::numeric_limits<double>::infinity();
  for (std::size_t i : S.rows) {
    const double s = row_sum(M, i, S.cols);
    if (s < min_selected) min_selected = s;
  }
  double max_other = kNegInf;
  std::size_t next = 0;
  for (std::size_t i = 0; i < M.rows(); ++i) {
    if (next < S.rows.size() && S.rows[next] == i) {
      ++next;
      continue;
    }
    const double s = row_sum(M, i, S.cols);
    if (s > max_other) max_other = s;
  }
  return min_selected >= max_other;
}

bool is_column_dominant(const Matrix& M, const Selection& S) {
  validate_selection(M, S);
  double min_selected = std::numeric_limits<double>::infinity();
  for (std::size_t j : S.cols) {
    const double s = col_sum(M, j, S.rows);
    if (s < min_selected) min_selected = s;
  }
  double max_other = kNegInf;
  std::size_t next = 0;
  for (std::size_t j = 0; j < M.cols(); ++j) {
    if (next < S.cols.size() && S.cols[next] == j) {
      ++next;
      continue;
    }
    const double s = col_sum(M, j, S.rows);
    if (s > max_other) max_other = s;
  }
  return min_selected >= max_other;
}

bool is_local_max(const Matrix& M, const Selection& S) {
  return is_row_dominant(M, S) && is_column_dominant(M, S);
}

}  // namespace submax
