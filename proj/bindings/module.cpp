#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "submax/algorithms.hpp"
#include "submax/decompose.hpp"
#include "submax/dominance.hpp"
#include "submax/experiments.hpp"
#include "submax/matrix.hpp"
#include "submax/overlap.hpp"
#include "submax/serialize.hpp"
#include "submax/theory.hpp"

namespace py = pybind11;
using namespace submax;

namespace {

DenseMatrix to_matrix(const py::array_t<double, py::array::c_style |
                                                    py::array::forcecast>& a) {
  if (a.ndim() != 2) {
    throw std::invalid_argument("expected a 2-D array");
  }
  auto n = static_cast<std::size_t>(a.shape(0));
  auto m = static_cast<std::size_t>(a.shape(1));
  std::vector<double> data(a.data(), a.data() + n * m);
  return DenseMatrix(n, m, std::move(data));
}

py::array_t<double> to_array(const Matrix& M) {
  py::array_t<double> out({M.rows(), M.cols()});
  auto buf = out.mutable_unchecked<2>();
  for (std::size_t i = 0; i < M.rows(); ++i) {
    for (std::size_t j = 0; j < M.cols(); ++j) {
      buf(i, j) = M.entry(i, j);
    }
  }
  return out;
}

Selection make_selection(std::vector<std::size_t> rows,
                         std::vector<std::size_t> cols) {
  return Selection{std::move(rows), std::move(cols)};
}

}  // namespace

PYBIND11_MODULE(_core, mod) {
  mod.doc() = "large-average submatrix search and overlap analysis";

  mod.def(
      "gen_gaussian",
      [](std::size_t n, std::size_t m, std::uint64_t seed) {
        return to_array(GaussianMatrix(n, m, seed));
      },
      py::arg("n"), py::arg("m"), py::arg("seed"),
      "Seeded i.i.d. standard normal matrix as a numpy array.");

  mod.def(
      "ave",
      [](const py::array_t<double, py::array::c_style | py::array::forcecast>&
             a,
         std::vector<std::size_t> rows, std::vector<std::size_t> cols) {
        DenseMatrix M = to_matrix(a);
        return ave(M, make_selection(std::move(rows), std::move(cols)));
      },
      py::arg("matrix"), py::arg("rows"), py::arg("cols"));

  mod.def(
      "is_local_max",
      [](const py::array_t<double, py::array::c_style | py::array::forcecast>&
             a,
         std::vector<std::size_t> rows, std::vector<std::size_t> cols) {
        DenseMatrix M = to_matrix(a);
        return is_local_max(M,
                            make_selection(std::move(rows), std::move(cols)));
      },
      py::arg("matrix"), py::arg("rows"), py::arg("cols"));

  mod.def(
      "run_las",
      [](const py::array_t<double, py::array::c_style | py::array::forcecast>&
             a,
         std::size_t k) {
        DenseMatrix M = to_matrix(a);
        LasResult r = run_las(M, k);
        py::dict out;
        out["rows"] = r.selection.rows;
        out["cols"] = r.selection.cols;
        out["t_las"] = r.t_las;
        out["converged"] = r.converged;
        out["ave"] = ave(M, r.selection);
        return out;
      },
      py::arg("matrix"), py::arg("k"));

  mod.def(
      "run_greedy",
      [](const py::array_t<double, py::array::c_style | py::array::forcecast>&
             a,
         double theta) {
        DenseMatrix M = to_matrix(a);
        GreedyResult r = run_greedy(M, theta);
        py::dict out;
        out["rows"] = r.selection.rows;
        out["cols"] = r.selection.cols;
        out["m"] = r.m;
        out["theta"] = r.theta;
        return out;
      },
      py::arg("matrix"), py::arg("theta"));

  mod.def(
      "greedy_for_k",
      [](const py::array_t<double, py::array::c_style | py::array::forcecast>&
             a,
         std::size_t k) {
        DenseMatrix M = to_matrix(a);
        GreedyResult r = greedy_for_k(M, k);
        py::dict out;
        out["rows"] = r.selection.rows;
        out["cols"] = r.selection.cols;
        out["m"] = r.m;
        out["theta"] = r.theta;
        return out;
      },
      py::arg("matrix"), py::arg("k"));

  mod.def(
      "run_igp",
      [](const py::array_t<double, py::array::c_style | py::array::forcecast>&
             a,
         std::size_t k) {
        DenseMatrix M = to_matrix(a);
        IgpResult r = run_igp(M, k);
        py::dict out;
        out["rows"] = r.selection.rows;
        out["cols"] = r.selection.cols;
        out["step_sums"] = r.step_sums;
        out["ave"] = ave(M, r.selection);
        return out;
      },
      py::arg("matrix"), py::arg("k"));

  mod.def(
      "brute_force",
      [](const py::array_t<double, py::array::c_style | py::array::forcecast>&
             a,
         std::size_t k) {
        DenseMatrix M = to_matrix(a);
        BruteResult r = brute_force(M, k);
        py::dict out;
        out["rows"] = r.selection.rows;
        out["cols"] = r.selection.cols;
        out["ave"] = r.ave;
        return out;
      },
      py::arg("matrix"), py::arg("k"));

  mod.def(
      "anova",
      [](const py::array_t<double, py::array::c_style | py::array::forcecast>&
             a) {
        DenseMatrix M = to_matrix(a);
        AnovaParts parts = anova(M);
        py::dict out;
        out["grand_mean"] = parts.grand_mean;
        out["row_effects"] = parts.row_effects;
        out["col_effects"] = parts.col_effects;
        out["residual"] = to_array(
            DenseMatrix(parts.k, parts.k, parts.residual));
        return out;
      },
      py::arg("matrix"));

  mod.def(
      "overlap",
      [](std::vector<std::size_t> rows1, std::vector<std::size_t> cols1,
         std::vector<std::size_t> rows2, std::vector<std::size_t> cols2,
         std::size_t k) {
        return overlap(make_selection(std::move(rows1), std::move(cols1)),
                       make_selection(std::move(rows2), std::move(cols2)), k);
      },
      py::arg("rows1"), py::arg("cols1"), py::arg("rows2"), py::arg("cols2"),
      py::arg("k"));

  mod.def("b_n", &b_n, py::arg("n"));
  mod.def("theta_n", &theta_n, py::arg("n"), py::arg("k"));
  mod.def(
      "predicted_ave",
      [](const std::string& alg, double n, std::size_t k, bool finite) {
        return predicted_ave(alg_from_name(alg), n, k, finite);
      },
      py::arg("alg"), py::arg("n"), py::arg("k"),
      py::arg("finite_correction") = true);
  mod.def("f_overlap", &f_overlap, py::arg("alpha"), py::arg("y1"),
          py::arg("y2"));
  mod.def("critical_alphas", []() {
    return py::make_tuple(critical_alpha1(), critical_alpha2());
  });
  mod.def(
      "region_summary",
      [](double alpha, std::size_t resolution) {
        RegionGrid grid = region_grid(alpha, resolution);
        py::dict out;
        out["components"] = region_components(grid);
        auto gap = projection_gap(grid, Axis::y1);
        if (gap) {
          out["gap"] = py::make_tuple(gap->first, gap->second);
        } else {
          out["gap"] = py::none();
        }
        return out;
      },
      py::arg("alpha"), py::arg("resolution"));
  mod.def("overlap_exponent_numeric", &overlap_exponent_numeric, py::arg("n"),
          py::arg("k"), py::arg("alpha"), py::arg("y1"), py::arg("y2"),
          py::arg("delta"));
  mod.def("sample_max_normalized", &sample_max_normalized, py::arg("n"),
          py::arg("trials"), py::arg("seed"));
  mod.def(
      "gumbel_cdf",
      [](double w) { return gumbel_reference().cdf(w); },
      py::arg("w"));
}
