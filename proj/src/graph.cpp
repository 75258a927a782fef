#include "sparsead/graph.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace sparsead {

namespace {

[[noreturn]] void bad_graph(const std::string& what) {
  throw std::invalid_argument("graph: " + what);
}

}  // namespace

Graph::Graph(int num_independent, int num_dependent, std::vector<Node> ops)
    : n_(num_independent), m_(num_dependent), ops_(std::move(ops)) {
  if (n_ < 1) bad_graph("need at least one independent");
  if (m_ < 1) bad_graph("need at least one dependent");
  if (m_ > static_cast<int>(ops_.size()))
    bad_graph("dependents must be non-independent nodes (m > ell - n)");
  for (std::size_t idx = 0; idx < ops_.size(); ++idx) {
    Node& nd = ops_[idx];
    int k = n_ + static_cast<int>(idx);
    std::string where = "node " + std::to_string(k + 1);
    int ar = arity(nd.tag);
    if (ar == 2) {
      if (nd.a < 0 || nd.a >= k || nd.b < 0 || nd.b >= k)
        bad_graph(where + ": operand out of range");
    } else if (ar == 1) {
      if (nd.a != nd.b) bad_graph(where + ": unary node with distinct slots");
      if (nd.a < 0 || nd.a >= k) bad_graph(where + ": operand out of range");
    } else {
      if (nd.a != -1 || nd.b != -1)
        bad_graph(where + ": const node with operands");
    }
    if (!has_const(nd.tag)) nd.c = 0.0;
    if (!std::isfinite(nd.c)) bad_graph(where + ": non-finite constant");
  }
}

EvalResult eval_zero(const Graph& g, const std::vector<double>& x) {
  int n = g.num_independent();
  int ell = g.num_nodes();
  if (static_cast<int>(x.size()) != n)
    throw std::invalid_argument("eval_zero: x has size " +
                                std::to_string(x.size()) + ", expected " +
                                std::to_string(n));
  for (int j = 0; j < n; ++j) {
    if (!std::isfinite(x[j]))
      throw std::invalid_argument("eval_zero: non-finite x[" +
                                  std::to_string(j + 1) + "]");
  }

  std::vector<double> v(ell);
  for (int j = 0; j < n; ++j) v[j] = x[j];

  auto fail = [](int k, const std::string& what) -> void {
    throw std::domain_error("eval_zero: " + what + " at node " +
                            std::to_string(k + 1));
  };

  for (int k = n; k < ell; ++k) {
    const Graph::Node& nd = g.node(k);
    double ua = nd.a >= 0 ? v[nd.a] : 0.0;
    double ub = nd.b >= 0 ? v[nd.b] : 0.0;
    switch (nd.tag) {
      case OpTag::Div:
        if (ub == 0.0) fail(k, "division by zero");
        break;
      case OpTag::DivConstL:
        if (ub == 0.0) fail(k, "division by zero");
        break;
      case OpTag::Log:
        if (ua <= 0.0) fail(k, "log of non-positive value");
        break;
      case OpTag::Sqrt:
        if (ua < 0.0) fail(k, "sqrt of negative value");
        break;
      default:
        break;
    }
    v[k] = eval_op(nd.tag, nd.c, ua, ub);
    if (!std::isfinite(v[k]))
      fail(k, std::string("non-finite result from ") + std::string(op_name(nd.tag)));
  }

  int m = g.num_dependent();
  EvalResult r;
  r.v = std::move(v);
  r.y.assign(r.v.end() - m, r.v.end());
  return r;
}

Graph prune(const Graph& g) {
  int n = g.num_independent();
  int m = g.num_dependent();
  int ell = g.num_nodes();

  std::vector<char> live(ell, 0);
  for (int i = 0; i < m; ++i) live[g.dep_node(i)] = 1;
  for (int k = ell - 1; k >= n; --k) {
    if (!live[k]) continue;
    const Graph::Node& nd = g.node(k);
    if (nd.a >= 0) live[nd.a] = 1;
    if (nd.b >= 0) live[nd.b] = 1;
  }

  std::vector<std::int32_t> remap(ell, -1);
  for (int j = 0; j < n; ++j) remap[j] = j;
  int next = n;
  std::vector<Graph::Node> ops;
  ops.reserve(g.num_interior());
  for (int k = n; k < ell; ++k) {
    if (!live[k]) continue;
    Graph::Node nd = g.node(k);
    if (nd.a >= 0) nd.a = remap[nd.a];
    if (nd.b >= 0) nd.b = remap[nd.b];
    remap[k] = next++;
    ops.push_back(nd);
  }
  return Graph(n, m, std::move(ops));
}

}  // namespace sparsead
