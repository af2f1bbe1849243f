#include <cmath>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "submax/overlap.hpp"
#include "submax/rng.hpp"

using namespace submax;

TEST_CASE("overlap counts shared indices") {
  Selection A{{0, 1, 2}, {3, 4, 5}};
  Selection B{{1, 2, 5}, {3, 9, 10}};
  auto [y1, y2] = overlap(A, B, 3);
  CHECK(y1 == doctest::Approx(2.0 / 3.0).epsilon(1e-15));
  CHECK(y2 == doctest::Approx(1.0 / 3.0).epsilon(1e-15));

  auto [full_r, full_c] = overlap(A, A, 3);
  CHECK(full_r == 1.0);
  CHECK(full_c == 1.0);

  Selection C{{7, 8, 9}, {0, 1, 2}};
  auto [none_r, none_c] = overlap(A, C, 3);
  CHECK(none_r == 0.0);
  CHECK(none_c == 0.0);
}

TEST_CASE("cholesky of a chain of overlapping pairs") {
  // Sets {0,1},{1,2},{2,3} with k=2: Sigma is tridiagonal with 1 on the
  // diagonal and 1/2 off it. Factor computed by hand.
  std::vector<std::vector<std::size_t>> sets = {{0, 1}, {1, 2}, {2, 3}};
  auto L = overlap_cholesky(sets);
  REQUIRE(L.size() == 3);
  CHECK(L[0][0] == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(L[1][0] == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(L[1][1] ==
        doctest::Approx(0.8660254037844386467637).epsilon(1e-15));
  CHECK(L[2][0] == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(L[2][1] ==
        doctest::Approx(0.5773502691896257645091).epsilon(1e-15));
  CHECK(L[2][2] ==
        doctest::Approx(0.8164965809277260327324).epsilon(1e-15));
}

TEST_CASE("cholesky of disjoint sets is the identity") {
  std::vector<std::vector<std::size_t>> sets = {{0, 1}, {2, 3}, {4, 5}};
  auto L = overlap_cholesky(sets);
  for (std::size_t a = 0; a < 3; ++a) {
    for (std::size_t b = 0; b <= a; ++b) {
      CHECK(L[a][b] == doctest::Approx(a == b ? 1.0 : 0.0).epsilon(1e-15));
    }
  }
}

TEST_CASE("cholesky rejects duplicate subsets") {
  std::vector<std::vector<std::size_t>> sets = {{0, 1}, {1, 0}};
  CHECK_THROWS_AS(overlap_cholesky(sets), std::runtime_error);
}

TEST_CASE("cholesky reconstructs sigma on random families") {
  Rng64 rng(31415);
  for (int family = 0; family < 25; ++family) {
    const std::size_t n = 20;
    const std::size_t k = 4;
    std::vector<std::vector<std::size_t>> sets;
    while (sets.size() < 4) {
      std::vector<std::size_t> pool(n);
      for (std::size_t i = 0; i < n; ++i) pool[i] = i;
      for (std::size_t i = 0; i < k; ++i) {
        std::size_t j = i + rng.next() % (n - i);
        std::swap(pool[i], pool[j]);
      }
      std::vector<std::size_t> subset(pool.begin(), pool.begin() + k);
      std::sort(subset.begin(), subset.end());
      bool dup = false;
      for (const auto& s : sets) dup = dup || s == subset;
      if (!dup) sets.push_back(subset);
    }
    auto L = overlap_cholesky(sets);
    for (std::size_t a = 0; a < sets.size(); ++a) {
      for (std::size_t b = 0; b <= a; ++b) {
        std::size_t shared = 0;
        for (std::size_t x : sets[a]) {
          for (std::size_t y : sets[b]) {
            if (x == y) ++shared;
          }
        }
        double sigma = static_cast<double>(shared) / static_cast<double>(k);
        double dot = 0.0;
        for (std::size_t c = 0; c <= b; ++c) dot += L[a][c] * L[b][c];
        CHECK(std::abs(dot - sigma) <= 1e-12);
      }
    }
  }
}

TEST_CASE("cholesky first column is overlap over k") {
  // Against the first set, entry a0 of the factor is exactly Sigma_a0.
  std::vector<std::vector<std::size_t>> sets = {{0, 1, 2, 3},
                                                {0, 1, 2, 9},
                                                {0, 5, 6, 7}};
  auto L = overlap_cholesky(sets);
  CHECK(L[1][0] == doctest::Approx(0.75).epsilon(1e-15));
  CHECK(L[2][0] == doctest::Approx(0.25).epsilon(1e-15));
}
