#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sparsead/graph.hpp"
#include "sparsead/pattern.hpp"
#include "sparsead/sparsity.hpp"

namespace sparsead {

// Mark vector threaded through the per-dependent traversals, shared across
// dependents and never reset between them. While dependent i (0-based) is
// being traversed the values mean:
//   i+1     visited (on the stack)
//   -(i+1)  done (placed in the subgraph)
//   m+1     ignore (node reaches no selected independent)
//   anything else, including marks left by other dependents: untouched.
// Construct it from a fresh init_activity result, whose c holds only 0 and
// m+1.
struct MarkVector {
  std::vector<std::int32_t> c;
  MarkVector() = default;
  explicit MarkVector(const ActivitySeq& act) : c(act.c) {}
};

struct SubgraphStats {
  std::int64_t popped = 0;            // pops in subgraph_sparsity
  std::int64_t top_examinations = 0;  // top-of-stack looks in sorted_subgraph
  std::int64_t subgraph_nodes = 0;    // sum of |G_i| over extracted subgraphs
  std::int64_t max_stack = 0;
};

// Work summary in the shape used by the complexity checks.
struct SubgraphWork {
  std::int64_t total_nodes = 0;  // sum |G_i|
  int ell = 0;
};
SubgraphWork subgraph_work(const SubgraphStats& stats, const Graph& g);

// Dependency-sorted node list of the subgraph of one dependent; the
// dependent's own node comes last.
struct SortedSubgraph {
  int dep = 0;  // 0-based dependent index
  std::vector<std::int32_t> nodes;

  std::string to_text() const;  // "G <i>: <k1> <k2> ...", 1-based
};

// Per-dependent depth-first sweep over the marks; row i collects the
// selected independents reachable from dependent i. Each subgraph node is
// handled once per dependent that contains it.
Pattern subgraph_sparsity(const Graph& g, const IndexSet& I, MarkVector& marks,
                          SubgraphStats* stats = nullptr);

// Extracts the subgraph of dependent `dep` in dependency order: every node
// appears after all of its in-subgraph operands. A node stays on the stack
// until its operands are done, so it is examined at the top at most twice.
// Operands are taken larger-index-first, which keeps the stack strictly
// decreasing from bottom to top. Throws if `dep` was already extracted with
// these marks.
SortedSubgraph sorted_subgraph(const Graph& g, int dep, MarkVector& marks,
                               SubgraphStats* stats = nullptr);

}  // namespace sparsead
