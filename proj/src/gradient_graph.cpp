#include <cmath>
#include <stdexcept>
#include <vector>

#include "sparsead/op_kind.hpp"
#include "sparsead/recorder.hpp"
#include "sparsead/sweeps.hpp"

namespace sparsead {

namespace {

// Symbolic adjoint value: structurally zero, a known constant, or a tape node.
struct Adj {
  enum Kind { Zero, Cnst, Node } kind = Zero;
  double c = 0.0;
  Var v;
};

Adj adj_const(double c) { return Adj{Adj::Cnst, c, Var{}}; }
Adj adj_node(Var v) { return Adj{Adj::Node, 0.0, v}; }

Var materialize(Recorder& rec, const Adj& a) {
  switch (a.kind) {
    case Adj::Zero: return rec.constant(0.0);
    case Adj::Cnst: return rec.constant(a.c);
    default: return a.v;
  }
}

Adj adj_add(Recorder& rec, const Adj& x, const Adj& y) {
  if (x.kind == Adj::Zero) return y;
  if (y.kind == Adj::Zero) return x;
  if (x.kind == Adj::Cnst && y.kind == Adj::Cnst) return adj_const(x.c + y.c);
  if (x.kind == Adj::Cnst) return adj_node(rec.unary(OpTag::AddConst, y.v, x.c));
  if (y.kind == Adj::Cnst) return adj_node(rec.unary(OpTag::AddConst, x.v, y.c));
  return adj_node(rec.binary(OpTag::Add, x.v, y.v));
}

Adj adj_neg(Recorder& rec, const Adj& x) {
  if (x.kind == Adj::Zero) return x;
  if (x.kind == Adj::Cnst) return adj_const(-x.c);
  return adj_node(rec.unary(OpTag::Neg, x.v));
}

Adj adj_mul_var(Recorder& rec, const Adj& x, Var u) {
  if (x.kind == Adj::Zero) return x;
  if (x.kind == Adj::Cnst) {
    if (x.c == 1.0) return adj_node(u);
    return adj_node(rec.unary(OpTag::MulConst, u, x.c));
  }
  return adj_node(rec.binary(OpTag::Mul, x.v, u));
}

// Multiplication by a literal keeps its node even when the literal is zero,
// so the recorded structure matches the sweep it mirrors.
Adj adj_mul_const(Recorder& rec, const Adj& x, double c) {
  if (x.kind == Adj::Zero) return x;
  if (x.kind == Adj::Cnst) return adj_const(x.c * c);
  if (c == 1.0) return x;
  return adj_node(rec.unary(OpTag::MulConst, x.v, c));
}

Adj adj_div_var(Recorder& rec, const Adj& x, Var u) {
  if (x.kind == Adj::Zero) return x;
  if (x.kind == Adj::Cnst) return adj_node(rec.unary(OpTag::DivConstL, u, x.c));
  return adj_node(rec.binary(OpTag::Div, x.v, u));
}

}  // namespace

Graph record_gradient_graph(const Graph& g, const std::vector<double>& w) {
  int n = g.num_independent();
  int m = g.num_dependent();
  int ell = g.num_nodes();
  if (w.size() != static_cast<std::size_t>(m)) {
    throw std::invalid_argument("record_gradient_graph: w has wrong length");
  }
  for (double wi : w) {
    if (!std::isfinite(wi)) {
      throw std::invalid_argument("record_gradient_graph: non-finite weight");
    }
  }

  Recorder rec(n);
  std::vector<Var> vars(ell);
  for (int j = 0; j < n; ++j) vars[j] = rec.independent(j);
  for (int k = n; k < ell; ++k) {
    const Graph::Node& nd = g.node(k);
    switch (arity(nd.tag)) {
      case 0: vars[k] = rec.constant(nd.c); break;
      case 1: vars[k] = rec.unary(nd.tag, vars[nd.a], nd.c); break;
      default: vars[k] = rec.binary(nd.tag, vars[nd.a], vars[nd.b]); break;
    }
  }

  std::vector<Adj> adj(ell);
  for (int i = 0; i < m; ++i) {
    if (w[i] != 0.0) adj[g.dep_node(i)] = adj_const(w[i]);
  }

  auto acc = [&](int t, const Adj& term) {
    adj[t] = adj_add(rec, adj[t], term);
  };

  for (int k = ell - 1; k >= n; --k) {
    Adj ak = adj[k];
    if (ak.kind == Adj::Zero) continue;
    const Graph::Node& nd = g.node(k);
    if (nd.a < 0) continue;
    int a = nd.a;
    int b = nd.b;
    switch (nd.tag) {
      case OpTag::Add:
        acc(a, ak);
        acc(b, ak);
        break;
      case OpTag::Sub:
        acc(a, ak);
        acc(b, adj_neg(rec, ak));
        break;
      case OpTag::Mul:
        acc(a, adj_mul_var(rec, ak, vars[b]));
        acc(b, adj_mul_var(rec, ak, vars[a]));
        break;
      case OpTag::Div: {
        Adj t = adj_div_var(rec, ak, vars[b]);
        acc(a, t);
        acc(b, adj_neg(rec, adj_mul_var(rec, t, vars[k])));
        break;
      }
      case OpTag::Pow: {
        Var pm1 = rec.binary(OpTag::Pow, vars[a],
                             rec.unary(OpTag::AddConst, vars[b], -1.0));
        acc(a, adj_mul_var(rec, adj_mul_var(rec, ak, pm1), vars[b]));
        acc(b, adj_mul_var(rec, adj_mul_var(rec, ak, vars[k]),
                           rec.unary(OpTag::Log, vars[a])));
        break;
      }
      case OpTag::Neg:
        acc(a, adj_neg(rec, ak));
        break;
      case OpTag::Sin:
        acc(a, adj_mul_var(rec, ak, rec.unary(OpTag::Cos, vars[a])));
        break;
      case OpTag::Cos:
        acc(a, adj_neg(rec, adj_mul_var(rec, ak, rec.unary(OpTag::Sin, vars[a]))));
        break;
      case OpTag::Exp:
        acc(a, adj_mul_var(rec, ak, vars[k]));
        break;
      case OpTag::Log:
        acc(a, adj_div_var(rec, ak, vars[a]));
        break;
      case OpTag::Sqrt:
        acc(a, adj_div_var(rec, ak, rec.unary(OpTag::MulConst, vars[k], 2.0)));
        break;
      case OpTag::AddConst:
      case OpTag::SubConstR:
        acc(a, ak);
        break;
      case OpTag::SubConstL:
        acc(a, adj_neg(rec, ak));
        break;
      case OpTag::MulConst:
        acc(a, adj_mul_const(rec, ak, nd.c));
        break;
      case OpTag::DivConstR:
        acc(a, adj_mul_const(rec, ak, 1.0 / nd.c));
        break;
      case OpTag::DivConstL:
        acc(a, adj_neg(rec, adj_mul_var(rec, ak,
                                        rec.binary(OpTag::Div, vars[k], vars[a]))));
        break;
      case OpTag::PowConstExp: {
        Var pm1 = rec.unary(OpTag::PowConstExp, vars[a], nd.c - 1.0);
        acc(a, adj_mul_const(rec, adj_mul_var(rec, ak, pm1), nd.c));
        break;
      }
      case OpTag::PowConstBase:
        acc(a, adj_mul_const(rec, adj_mul_var(rec, ak, vars[k]),
                             std::log(nd.c)));
        break;
      case OpTag::Copy:
        acc(a, ak);
        break;
      case OpTag::Const:
        break;
    }
  }

  std::vector<Var> deps(n);
  for (int j = 0; j < n; ++j) deps[j] = materialize(rec, adj[j]);
  return prune(rec.finish(deps));
}

}  // namespace sparsead
