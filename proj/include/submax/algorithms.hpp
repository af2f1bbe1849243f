#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "submax/matrix.hpp"

namespace submax {

struct LasTraceEntry {
  std::size_t step;  // 0 is the initial selection, then completed searches
  Selection selection;
  double ave;
};

struct LasResult {
  Selection selection;
  std::size_t t_las = 0;
  std::vector<LasTraceEntry> trace;
  bool converged = false;
};

// Alternating column/row improvement from init (default rows = cols =
// {0..k-1}). A search that returns the incumbent set terminates the loop,
// except that the very first search cannot terminate on its own: the
// initial rows are arbitrary, so a confirming first column search proves
// nothing about them. t_las counts every completed search including the
// terminating one.
LasResult run_las(const Matrix& M, std::size_t k,
                  std::optional<Selection> init = std::nullopt);

struct GreedyResult {
  Selection selection;
  std::size_t m = 0;
  double theta = 0.0;
};

// Alternating bipartite clique construction over the graph with an edge
// wherever M_ij > theta. The first row is the smallest one with a nonempty
// thresholded row; every later pick takes the candidate keeping the most
// fresh candidates alive on the opposite side (ties to the smallest
// index), which is what lets the construction reach the k ~ log n / log(1/p)
// clique sizes the threshold is calibrated for. Ends on the column side so
// the result is balanced.
GreedyResult run_greedy(const Matrix& M, double theta);

class UnderTargetError : public std::runtime_error {
 public:
  UnderTargetError(std::size_t achieved, GreedyResult partial);
  std::size_t achieved_m() const { return achieved_; }
  const GreedyResult& partial() const { return partial_; }

 private:
  std::size_t achieved_;
  GreedyResult partial_;
};

// run_greedy at theta_n(n, k), truncated to the first k rows/columns when
// the clique overshoots. Throws UnderTargetError when m < k.
GreedyResult greedy_for_k(const Matrix& M, std::size_t k);

struct IgpResult {
  Selection selection;
  std::vector<double> step_sums;
};

// Incremental greedy over disjoint index blocks P_r = [(r-1)*floor(n/k),
// r*floor(n/k)). Starts from row 0, then alternately adds the best column
// of block P_|I| against the current rows and the best row of block
// P_{|I|+1} against the current columns.
IgpResult run_igp(const Matrix& M, std::size_t k);

struct BruteResult {
  Selection selection;
  double ave = 0.0;
};

// Exact maximizer. Enumerates row sets only; for a fixed row set the best
// column response is the k columns with the largest sums.
BruteResult brute_force(const Matrix& M, std::size_t k);

// All k x k selections passing is_local_max, via the same row-set
// enumeration plus best-column response. Throws when C(n,k)^2 exceeds
// budget.
std::vector<Selection> enumerate_local_maxima(const Matrix& M, std::size_t k,
                                              std::uint64_t budget);

}  // namespace submax
