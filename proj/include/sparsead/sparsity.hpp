#pragma once

#include <cstdint>
#include <vector>

#include "sparsead/graph.hpp"
#include "sparsead/pattern.hpp"

namespace sparsead {

// Per-node activity produced by init_activity. c[k] is 0 when node k depends
// on a selected independent and m+1 ("ignore") otherwise; d[k] is 1 when a
// selected dependent consumes node k. Both are computed with flag sweeps, no
// index sets, in O(ell).
struct ActivitySeq {
  std::vector<std::int32_t> c;
  std::vector<std::uint8_t> d;
};

ActivitySeq init_activity(const Graph& g, const IndexSet& J, const IndexSet& I);

// Row sets switch from sorted integer vectors to dense bit rows when the
// selected index set is larger than this.
inline constexpr int kDenseSetThreshold = 64;

// Dependency sets X_k propagated forward; row i of the result is the set of
// selected independents dependent i can reach. Guarantees
// [f^(1)(x)]_{i,j} != 0 => j in row i, for j in J.
Pattern forward_jacobian_sparsity(const Graph& g, const IndexSet& J,
                                  int dense_threshold = kDenseSetThreshold);

// Adjoint sets Y_k propagated backward. Row j of the result is Y_j for
// independent j: the selected dependents that consume j. The propagation
// runs over every non-independent node (descending), so seeds placed on the
// tail dependents reach their operands; a shorter loop that stops before the
// dependent block would never move the seeds at all. Equals the transpose of
// the forward pattern when both selections are full.
Pattern reverse_jacobian_sparsity(const Graph& g, const IndexSet& I,
                                  int dense_threshold = kDenseSetThreshold);

// Sparsity of the Hessian of g(x) = sum_i w_i f_i(x) for any w supported on
// w_support. Both directions return the same n x n symmetric pattern,
// restricted to J x J; forward accumulates nonlinear interactions into
// per-independent sets N_j, reverse pushes sets M_k through the tape and
// reads them off at the independents.
Pattern forward_hessian_sparsity(const Graph& g, const IndexSet& J,
                                 const IndexSet& w_support,
                                 int dense_threshold = kDenseSetThreshold);
Pattern reverse_hessian_sparsity(const Graph& g, const IndexSet& J,
                                 const IndexSet& w_support,
                                 int dense_threshold = kDenseSetThreshold);

}  // namespace sparsead
