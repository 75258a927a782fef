#pragma once

#include <vector>

#include "sparsead/graph.hpp"
#include "sparsead/mat.hpp"
#include "sparsead/subgraph.hpp"

namespace sparsead {

// Tangent sweep: xdot holds r directions as n x r columns, the result is the
// m x r bundle f^(1)(x) * xdot. All r directions ride one pass; a single
// direction is the r = 1 special case of the same loop.
Mat forward_one(const Graph& g, const std::vector<double>& x, const Mat& xdot);

// Adjoint sweep over precomputed node values v (as returned by eval_zero):
// result is f^(1)(x)^T * w.
std::vector<double> reverse_one(const Graph& g, const std::vector<double>& v,
                                const std::vector<double>& w);

// Multi-weight adjoint sweep: w is m x q, result n x q.
Mat reverse_many(const Graph& g, const std::vector<double>& v, const Mat& w);

struct SparseRow {
  std::vector<int> cols;      // ascending independent indices
  std::vector<double> vals;
};

// Adjoint sweep restricted to one sorted subgraph: computes the Jacobian row
// of the subgraph's dependent. vbar is a caller-owned workspace of length
// ell that must be zero on entry; every entry the sweep touches is zeroed
// again before returning, so one workspace serves many rows. Operands marked
// ignore lie outside the subgraph and are skipped entirely.
SparseRow reverse_subgraph(const Graph& g, const std::vector<double>& v,
                           const SortedSubgraph& sub, const MarkVector& marks,
                           std::vector<double>& vbar);

// Hessian-vector product of g(x) = w.f(x): one tangent sweep in direction u
// followed by an adjoint sweep carrying both vbar and its directional
// derivative. hess_vec_many takes r directions as n x r columns.
std::vector<double> hess_vec(const Graph& g, const std::vector<double>& x,
                             const std::vector<double>& w,
                             const std::vector<double>& u);
Mat hess_vec_many(const Graph& g, const std::vector<double>& x,
                  const std::vector<double>& w, const Mat& u);

// Interprets the adjoint sweep of g(x) = w.f(x) symbolically on a fresh tape
// and returns the result: a graph h with n independents and n dependents
// whose value is the gradient of g (weights baked in as constants). Updates
// are emitted only where the incoming adjoint is structurally nonzero;
// weight entries equal to zero are structural zeros. The recorded tape is
// pruned before returning.
Graph record_gradient_graph(const Graph& g, const std::vector<double>& w);

}  // namespace sparsead
