#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace submax {

class Matrix {
 public:
  virtual ~Matrix() = default;
  virtual std::size_t rows() const = 0;
  virtual std::size_t cols() const = 0;
  virtual double entry(std::size_t i, std::size_t j) const = 0;
};

class DenseMatrix : public Matrix {
 public:
  DenseMatrix(std::size_t n, std::size_t m, std::vector<double> data);
  explicit DenseMatrix(const std::vector<std::vector<double>>& rows);

  std::size_t rows() const override { return n_; }
  std::size_t cols() const override { return m_; }
  double entry(std::size_t i, std::size_t j) const override {
    return data_[i * m_ + j];
  }
  const std::vector<double>& data() const { return data_; }

 private:
  std::size_t n_;
  std::size_t m_;
  std::vector<double> data_;
};

// Seeded i.i.d. standard normal matrix. Entry (i,j) is
// Phi^{-1}((u + 0.5)/2^64) where u is output i*m+j of the SplitMix64 stream
// seeded by seed. Small matrices are materialized; large ones are computed
// entry-by-entry on demand, which yields identical values.
class GaussianMatrix : public Matrix {
 public:
  GaussianMatrix(std::size_t n, std::size_t m, std::uint64_t seed);

  std::size_t rows() const override { return n_; }
  std::size_t cols() const override { return m_; }
  double entry(std::size_t i, std::size_t j) const override;
  std::uint64_t seed() const { return seed_; }

  static constexpr std::size_t kMaterializeLimit = std::size_t{1} << 20;

 private:
  std::size_t n_;
  std::size_t m_;
  std::uint64_t seed_;
  std::vector<double> buffer_;
};

struct Selection {
  std::vector<std::size_t> rows;
  std::vector<std::size_t> cols;
};

// Throws std::invalid_argument unless both index sets are nonempty,
// strictly increasing and within the matrix shape.
void validate_selection(const Matrix& M, const Selection& S);

// Mean of the selected entries, accumulated in row-major selection order.
double ave(const Matrix& M, const Selection& S);

DenseMatrix submatrix(const Matrix& M, const Selection& S);

}  // namespace submax
