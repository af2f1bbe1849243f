#pragma once

#include <vector>

#include "submax/matrix.hpp"

namespace submax {

// B = grand_mean * 11' + Row(B) + Col(B) + residual, with
// Row(B)_ij = B_i. - B.., Col(B)_ij = B_.j - B.. and residual doubly
// centered.
struct AnovaParts {
  std::size_t k = 0;
  double grand_mean = 0.0;
  std::vector<double> row_effects;
  std::vector<double> col_effects;
  std::vector<double> residual;  // k*k row-major
};

AnovaParts anova(const Matrix& B);
DenseMatrix reconstruct(const AnovaParts& parts);

// psi1 = sqrt(2 log n)(sqrt(k) ave(A) - b_n). The row variant stores
// sqrt(2k log n) * Row(A) in psi2 and Col(A), ANOVA(A) unscaled in
// psi3/psi4; the column variant scales Col(A) instead.
struct PsiParts {
  std::size_t k = 0;
  double n_context = 0.0;
  bool row_variant = true;
  double psi1 = 0.0;
  std::vector<double> psi2;
  std::vector<double> psi3;
  std::vector<double> psi4;
};

PsiParts psi_row(const Matrix& A, double n);
PsiParts psi_col(const Matrix& A, double n);
DenseMatrix psi_inverse(const PsiParts& parts);

}  // namespace submax
