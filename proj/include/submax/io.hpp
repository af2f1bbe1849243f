#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include "submax/matrix.hpp"

namespace submax {

// Matrix interchange CSV: one row per line, shortest round-trip decimal
// doubles, ',' separator, no header.
std::string matrix_to_csv(const Matrix& M);
DenseMatrix matrix_from_csv_text(const std::string& text);
DenseMatrix read_csv(const std::string& path);
void write_csv(const Matrix& M, const std::string& path);

// Canonical regeneration descriptor {"n":..., "m":..., "seed":...}.
struct Descriptor {
  std::size_t n;
  std::size_t m;
  std::uint64_t seed;
};

std::string descriptor_to_json(const Descriptor& d);
Descriptor descriptor_from_json(const std::string& text);
GaussianMatrix matrix_from_descriptor(const Descriptor& d);

// Shortest decimal form that parses back to the same double.
std::string format_double(double v);

}  // namespace submax
