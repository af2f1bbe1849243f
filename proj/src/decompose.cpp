#include "submax/decompose.hpp"

#include <cmath>
#include <stdexcept>

#include "submax/theory.hpp"

namespace submax {

namespace {

void require_square(const Matrix& B) {
  if (B.rows() != B.cols()) {
    throw std::invalid_argument("decomposition requires a square matrix");
  }
}

}  // namespace

AnovaParts anova(const Matrix& B) {
  require_square(B);
  const std::size_t k = B.rows();
  AnovaParts parts;
  parts.k = k;
  parts.row_effects.assign(k, 0.0);
  parts.col_effects.assign(k, 0.0);
  parts.residual.assign(k * k, 0.0);

  double total = 0.0;
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      const double v = B.entry(i, j);
      parts.row_effects[i] += v;
      parts.col_effects[j] += v;
      total += v;
    }
  }
  const double kk = static_cast<double>(k);
  parts.grand_mean = total / (kk * kk);
  for (std::size_t i = 0; i < k; ++i) {
    parts.row_effects[i] = parts.row_effects[i] / kk - parts.grand_mean;
  }
  for (std::size_t j = 0; j < k; ++j) {
    parts.col_effects[j] = parts.col_effects[j] / kk - parts.grand_mean;
  }
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      parts.residual[i * k + j] = B.entry(i, j) - parts.grand_mean -
                                  parts.row_effects[i] - parts.col_effects[j];
    }
  }
  return parts;
}

DenseMatrix reconstruct(const AnovaParts& parts) {
  const std::size_t k = parts.k;
  if (k == 0 || parts.row_effects.size() != k || parts.col_effects.size() != k ||
      parts.residual.size() != k * k) {
    throw std::invalid_argument("reconstruct: inconsistent dimensions");
  }
  std::vector<double> data(k * k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      data[i * k + j] = parts.grand_mean + parts.row_effects[i] +
                        parts.col_effects[j] + parts.residual[i * k + j];
    }
  }
  return DenseMatrix(k, k, std::move(data));
}

namespace {

PsiParts psi_impl(const Matrix& A, double n, bool row_variant) {
  require_square(A);
  if (n < 3.0) {
    throw std::domain_error("psi: n must be at least 3");
  }
  const std::size_t k = A.rows();
  const double kk = static_cast<double>(k);
  const AnovaParts parts = anova(A);
  const double scale = std::sqrt(2.0 * kk * std::log(n));

  PsiParts psi;
  psi.k = k;
  psi.n_context = n;
  psi.row_variant = row_variant;
  psi.psi1 = std::sqrt(2.0 * std::log(n)) *
             (std::sqrt(kk) * parts.grand_mean - b_n(n));
  psi.psi2.assign(k * k, 0.0);
  psi.psi3.assign(k * k, 0.0);
  psi.psi4 = parts.residual;
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      const double row_term = parts.row_effects[i];
      const double col_term = parts.col_effects[j];
      if (row_variant) {
        psi.psi2[i * k + j] = scale * row_term;
        psi.psi3[i * k + j] = col_term;
      } else {
        psi.psi2[i * k + j] = row_term;
        psi.psi3[i * k + j] = scale * col_term;
      }
    }
  }
  return psi;
}

}  // namespace

PsiParts psi_row(const Matrix& A, double n) { return psi_impl(A, n, true); }

PsiParts psi_col(const Matrix& A, double n) { return psi_impl(A, n, false); }

DenseMatrix psi_inverse(const PsiParts& parts) {
  const std::size_t k = parts.k;
  if (k == 0 || parts.psi2.size() != k * k || parts.psi3.size() != k * k ||
      parts.psi4.size() != k * k) {
    throw std::invalid_argument("psi_inverse: inconsistent dimensions");
  }
  const double n = parts.n_context;
  const double kk = static_cast<double>(k);
  const double scale = std::sqrt(2.0 * kk * std::log(n));
  const double mean = parts.psi1 / scale + b_n(n) / std::sqrt(kk);
  std::vector<double> data(k * k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      const std::size_t idx = i * k + j;
      const double row_term =
          parts.row_variant ? parts.psi2[idx] / scale : parts.psi2[idx];
      const double col_term =
          parts.row_variant ? parts.psi3[idx] : parts.psi3[idx] / scale;
      data[idx] = mean + row_term + col_term + parts.psi4[idx];
    }
  }
  return DenseMatrix(k, k, std::move(data));
}

}  // namespace submax
