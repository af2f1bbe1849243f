#include "submax/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <system_error>

#include "json.hpp"

namespace submax {

std::string format_double(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

std::string matrix_to_csv(const Matrix& M) {
  std::string out;
  for (std::size_t i = 0; i < M.rows(); ++i) {
    for (std::size_t j = 0; j < M.cols(); ++j) {
      if (j > 0) out += ',';
      out += format_double(M.entry(i, j));
    }
    out += '\n';
  }
  return out;
}

DenseMatrix matrix_from_csv_text(const std::string& text) {
  std::vector<double> data;
  std::size_t n = 0;
  std::size_t m = 0;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::size_t fields = 0;
    const char* p = line.data();
    const char* end = line.data() + line.size();
    while (true) {
      double v = 0.0;
      const auto res = std::from_chars(p, end, v);
      if (res.ec != std::errc{}) {
        throw std::invalid_argument("CSV: malformed number");
      }
      data.push_back(v);
      ++fields;
      p = res.ptr;
      if (p == end) break;
      if (*p != ',') {
        throw std::invalid_argument("CSV: expected ','");
      }
      ++p;
    }
    if (n == 0) {
      m = fields;
    } else if (fields != m) {
      throw std::invalid_argument("CSV: ragged rows");
    }
    ++n;
  }
  if (n == 0) {
    throw std::invalid_argument("CSV: empty input");
  }
  return DenseMatrix(n, m, std::move(data));
}

DenseMatrix read_csv(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::runtime_error("cannot open " + path);
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return matrix_from_csv_text(buf.str());
}

void write_csv(const Matrix& M, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw std::runtime_error("cannot write " + path);
  }
  out << matrix_to_csv(M);
}

std::string descriptor_to_json(const Descriptor& d) {
  nlohmann::json j;
  j["n"] = d.n;
  j["m"] = d.m;
  j["seed"] = d.seed;
  return j.dump();
}

Descriptor descriptor_from_json(const std::string& text) {
  const auto j = nlohmann::json::parse(text);
  Descriptor d;
  d.n = j.at("n").get<std::size_t>();
  d.m = j.at("m").get<std::size_t>();
  d.seed = j.at("seed").get<std::uint64_t>();
  return d;
}

GaussianMatrix matrix_from_descriptor(const Descriptor& d) {
  return GaussianMatrix(d.n, d.m, d.seed);
}

}  // namespace submax
