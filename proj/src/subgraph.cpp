#include "sparsead/subgraph.hpp"

#include <algorithm>
#include <stdexcept>

namespace sparsead {

namespace {

void check_marks(const Graph& g, const MarkVector& marks) {
  if (static_cast<int>(marks.c.size()) != g.num_nodes())
    throw std::invalid_argument("subgraph: mark vector length mismatch");
}

}  // namespace

SubgraphWork subgraph_work(const SubgraphStats& stats, const Graph& g) {
  return {stats.subgraph_nodes, g.num_nodes()};
}

std::string SortedSubgraph::to_text() const {
  std::string out = "G " + std::to_string(dep + 1) + ":";
  for (int k : nodes) out += " " + std::to_string(k + 1);
  return out;
}

Pattern subgraph_sparsity(const Graph& g, const IndexSet& I, MarkVector& marks,
                          SubgraphStats* stats) {
  check_marks(g, marks);
  int n = g.num_independent();
  int m = g.num_dependent();
  for (int i : I) {
    if (i < 0 || i >= m)
      throw std::invalid_argument("subgraph: dependent index out of range");
  }

  SubgraphStats local;
  SubgraphStats& st = stats ? *stats : local;
  Pattern p(m, n);

  std::vector<int> stack;
  for (int i : I) {
    const int done = i + 1;
    const int ignore = m + 1;
    std::vector<int> row;
    stack.clear();
    stack.push_back(g.dep_node(i));
    while (!stack.empty()) {
      st.max_stack = std::max(st.max_stack,
                              static_cast<std::int64_t>(stack.size()));
      int k = stack.back();
      stack.pop_back();
      ++st.popped;
      const Graph::Node& nd = g.node(k);
      if (nd.a < 0) continue;
      int ops[2] = {nd.a, nd.b};
      int nops = nd.b != nd.a ? 2 : 1;
      for (int t = 0; t < nops; ++t) {
        int nu = ops[t];
        int mark = marks.c[nu];
        if (mark == done || mark == ignore) continue;
        marks.c[nu] = done;
        if (nu < n)
          row.push_back(nu);
        else
          stack.push_back(nu);
      }
    }
    p.row(i) = IndexSet(std::move(row));
  }
  return p;
}

SortedSubgraph sorted_subgraph(const Graph& g, int dep, MarkVector& marks,
                               SubgraphStats* stats) {
  check_marks(g, marks);
  int n = g.num_independent();
  int m = g.num_dependent();
  if (dep < 0 || dep >= m)
    throw std::invalid_argument("subgraph: dependent index out of range");

  const int visited = dep + 1;
  const int done = -(dep + 1);
  const int ignore = m + 1;
  int dn = g.dep_node(dep);
  if (marks.c[dn] == visited || marks.c[dn] == done)
    throw std::invalid_argument(
        "sorted_subgraph: dependent " + std::to_string(dep + 1) +
        " already extracted with this mark vector");

  SubgraphStats local;
  SubgraphStats& st = stats ? *stats : local;

  SortedSubgraph out;
  out.dep = dep;
  std::vector<int> stack{dn};
  auto is_settled = [&](int nu) {
    return marks.c[nu] == done || marks.c[nu] == ignore;
  };

  while (!stack.empty()) {
    st.max_stack =
        std::max(st.max_stack, static_cast<std::int64_t>(stack.size()));
    int k = stack.back();
    ++st.top_examinations;
    const Graph::Node& nd = g.node(k);
    bool ready = nd.a < 0 || (is_settled(nd.a) &&
                              (nd.b == nd.a || is_settled(nd.b)));
    if (ready) {
      stack.pop_back();
      out.nodes.push_back(k);
      marks.c[k] = done;
      continue;
    }
    // Larger operand first: the smaller one cannot depend on it, so the
    // smaller is dealt with before the larger comes back to the top.
    int hi = std::max(nd.a, nd.b);
    int lo = std::min(nd.a, nd.b);
    int nops = hi != lo ? 2 : 1;
    int ops[2] = {hi, lo};
    int advanced = 0;
    for (int t = 0; t < nops; ++t) {
      int nu = ops[t];
      int mark = marks.c[nu];
      if (mark == visited || mark == done || mark == ignore) continue;
      ++advanced;
      if (nu < n) {
        out.nodes.push_back(nu);
        marks.c[nu] = done;
      } else {
        stack.push_back(nu);
        marks.c[nu] = visited;
      }
    }
    if (advanced == 0)
      throw std::logic_error("sorted_subgraph: no progress (corrupt marks)");
  }

  st.subgraph_nodes += static_cast<std::int64_t>(out.nodes.size());
  return out;
}

}  // namespace sparsead
