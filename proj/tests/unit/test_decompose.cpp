#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "submax/decompose.hpp"
#include "submax/matrix.hpp"
#include "submax/rng.hpp"
#include "submax/theory.hpp"

using namespace submax;

namespace {

double max_abs_diff(const Matrix& A, const Matrix& B) {
  double worst = 0.0;
  for (std::size_t i = 0; i < A.rows(); ++i) {
    for (std::size_t j = 0; j < A.cols(); ++j) {
      worst = std::max(worst, std::abs(A.entry(i, j) - B.entry(i, j)));
    }
  }
  return worst;
}

}  // namespace

TEST_CASE("anova of an additive matrix has zero residual") {
  DenseMatrix B({{1, 2}, {3, 4}});
  AnovaParts p = anova(B);
  CHECK(p.grand_mean == doctest::Approx(2.5).epsilon(1e-15));
  CHECK(p.row_effects[0] == doctest::Approx(-1.0).epsilon(1e-15));
  CHECK(p.row_effects[1] == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(p.col_effects[0] == doctest::Approx(-0.5).epsilon(1e-15));
  CHECK(p.col_effects[1] == doctest::Approx(0.5).epsilon(1e-15));
  for (double r : p.residual) CHECK(std::abs(r) <= 1e-15);
}

TEST_CASE("anova of the identity pattern") {
  DenseMatrix B({{1, 0}, {0, 1}});
  AnovaParts p = anova(B);
  CHECK(p.grand_mean == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(std::abs(p.row_effects[0]) <= 1e-15);
  CHECK(std::abs(p.col_effects[1]) <= 1e-15);
  CHECK(p.residual[0] == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(p.residual[1] == doctest::Approx(-0.5).epsilon(1e-15));
}

TEST_CASE("anova round trip and orthogonality on random matrices") {
  for (std::size_t k = 1; k <= 12; ++k) {
    GaussianMatrix B(k, k, derive(555, k));
    AnovaParts p = anova(B);
    CHECK(max_abs_diff(B, reconstruct(p)) <= 1e-13);

    double rsum = 0.0;
    double csum = 0.0;
    for (double v : p.row_effects) rsum += v;
    for (double v : p.col_effects) csum += v;
    CHECK(std::abs(rsum) <= 1e-12);
    CHECK(std::abs(csum) <= 1e-12);
    for (std::size_t i = 0; i < k; ++i) {
      double row_res = 0.0;
      for (std::size_t j = 0; j < k; ++j) row_res += p.residual[i * k + j];
      CHECK(std::abs(row_res) <= 1e-12);
    }
  }
}

TEST_CASE("anova requires a square matrix") {
  DenseMatrix B(1, 2, {1, 2});
  CHECK_THROWS_AS(anova(B), std::invalid_argument);
}

TEST_CASE("psi1 matches its defining formula") {
  GaussianMatrix A(4, 4, 808);
  const double n = 2500.0;
  PsiParts p = psi_row(A, n);
  double mean = ave(A, Selection{{0, 1, 2, 3}, {0, 1, 2, 3}});
  double expected = std::sqrt(2.0 * std::log(n)) * (2.0 * mean - b_n(n));
  CHECK(p.psi1 == doctest::Approx(expected).epsilon(1e-13));
  CHECK(p.row_variant);
  CHECK_FALSE(psi_col(A, n).row_variant);
}

TEST_CASE("psi round trips for both variants") {
  for (std::size_t k : {1, 2, 5, 9}) {
    GaussianMatrix A(k, k, derive(909, k));
    CHECK(max_abs_diff(A, psi_inverse(psi_row(A, 1000.0))) <= 1e-11);
    CHECK(max_abs_diff(A, psi_inverse(psi_col(A, 1000.0))) <= 1e-11);
  }
}

TEST_CASE("psi requires a meaningful n") {
  GaussianMatrix A(2, 2, 3);
  CHECK_THROWS_AS(psi_row(A, 2.0), std::domain_error);
  CHECK_THROWS_AS(psi_col(A, -1.0), std::domain_error);
}
