#include "submax/matrix.hpp"

#include <limits>
#include <stdexcept>

#include "submax/normal.hpp"
#include "submax/rng.hpp"

namespace submax {

DenseMatrix::DenseMatrix(std::size_t n, std::size_t m, std::vector<double> data)
    : n_(n), m_(m), data_(std::move(data)) {
  if (n == 0 || m == 0) {
    throw std::invalid_argument("DenseMatrix: empty shape");
  }
  if (data_.size() != n * m) {
    throw std::invalid_argument("DenseMatrix: data length mismatch");
  }
}

DenseMatrix::DenseMatrix(const std::vector<std::vector<double>>& rows)
    : n_(rows.size()), m_(rows.empty() ? 0 : rows.front().size()) {
  if (n_ == 0 || m_ == 0) {
    throw std::invalid_argument("DenseMatrix: empty shape");
  }
  data_.reserve(n_ * m_);
  for (const auto& row : rows) {
    if (row.size() != m_) {
      throw std::invalid_argument("DenseMatrix: ragged rows");
    }
    data_.insert(data_.end(), row.begin(), row.end());
  }
}

GaussianMatrix::GaussianMatrix(std::size_t n, std::size_t m, std::uint64_t seed)
    : n_(n), m_(m), seed_(seed) {
  if (n == 0 || m == 0) {
    throw std::invalid_argument("GaussianMatrix: empty shape");
  }
  if (m != 0 && n > std::numeric_limits<std::size_t>::max() / m) {
    throw std::length_error("GaussianMatrix: n*m overflows");
  }
  const std::size_t total = n * m;
  if (total <= kMaterializeLimit) {
    buffer_.resize(total);
    for (std::size_t idx = 0; idx < total; ++idx) {
      buffer_[idx] = uniform_to_normal(stream_at(seed_, idx));
    }
  }
}

double GaussianMatrix::entry(std::size_t i, std::size_t j) const {
  const std::size_t idx = i * m_ + j;
  if (!buffer_.empty()) {
    return buffer_[idx];
  }
  return uniform_to_normal(stream_at(seed_, idx));
}

void validate_selection(const Matrix& M, const Selection& S) {
  if (S.rows.empty() || S.cols.empty()) {
    throw std::invalid_argument("selection: empty row or column set");
  }
  for (std::size_t a = 0; a < S.rows.size(); ++a) {
    if (S.rows[a] >= M.rows() || (a > 0 && S.rows[a] <= S.rows[a - 1])) {
      throw std::invalid_argument("selection: bad row index set");
    }
  }
  for (std::size_t a = 0; a < S.cols.size(); ++a) {
    if (S.cols[a] >= M.cols() || (a > 0 && S.cols[a] <= S.cols[a - 1])) {
      throw std::invalid_argument("selection: bad column index set");
    }
  }
}

double ave(const Matrix& M, const Selection& S) {
  validate_selection(M, S);
  double sum = 0.0;
  for (std::size_t i : S.rows) {
    for (std::size_t j : S.cols) {
      sum += M.entry(i, j);
    }
  }
  return sum / (static_cast<double>(S.rows.size()) *
                static_cast<double>(S.cols.size()));
}

DenseMatrix submatrix(const Matrix& M, const Selection& S) {
  validate_selection(M, S);
  std::vector<double> data;
  data.reserve(S.rows.size() * S.cols.size());
  for (std::size_t i : S.rows) {
    for (std::size_t j : S.cols) {
      data.push_back(M.entry(i, j));
    }
  }
  return DenseMatrix(S.rows.size(), S.cols.size(), std::move(data));
}

}  // namespace submax
