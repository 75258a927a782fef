#include "sparsead/sparsity.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace sparsead {

namespace {

void check_selection(const IndexSet& sel, int limit, const char* what) {
  for (int x : sel) {
    if (x < 0 || x >= limit)
      throw std::invalid_argument(std::string(what) + " index out of range");
  }
}

void union_sorted(std::vector<int>& dst, const std::vector<int>& src) {
  if (src.empty()) return;
  if (dst.empty()) {
    dst = src;
    return;
  }
  std::vector<int> merged;
  merged.reserve(dst.size() + src.size());
  std::set_union(dst.begin(), dst.end(), src.begin(), src.end(),
                 std::back_inserter(merged));
  dst = std::move(merged);
}

// Rows as sorted integer vectors. Chosen for small selections.
struct VecBank {
  std::vector<std::vector<int>> rows;
  VecBank(int count, int /*width*/) : rows(count) {}

  void seed(int k, int e) { rows[k].push_back(e); }
  bool empty(int k) const { return rows[k].empty(); }
  std::vector<int> collect(int k) const { return rows[k]; }
  template <class F>
  void for_each(int k, F f) const {
    for (int e : rows[k]) f(e);
  }
};

void bank_union(VecBank& dst, int dr, const VecBank& src, int sr) {
  union_sorted(dst.rows[dr], src.rows[sr]);
}

// Rows as dense bit masks over the selection universe. Chosen for large
// selections, where per-node integer rows get quadratic.
struct BitBank {
  int words;
  std::vector<std::uint64_t> bits;
  BitBank(int count, int width)
      : words((width + 63) / 64),
        bits(static_cast<std::size_t>(count) * words, 0) {}

  std::uint64_t* row(int k) { return bits.data() + static_cast<std::size_t>(k) * words; }
  const std::uint64_t* row(int k) const {
    return bits.data() + static_cast<std::size_t>(k) * words;
  }
  void seed(int k, int e) { row(k)[e >> 6] |= std::uint64_t{1} << (e & 63); }
  bool empty(int k) const {
    const std::uint64_t* r = row(k);
    for (int w = 0; w < words; ++w)
      if (r[w]) return false;
    return true;
  }
  std::vector<int> collect(int k) const {
    std::vector<int> out;
    const std::uint64_t* r = row(k);
    for (int w = 0; w < words; ++w) {
      std::uint64_t m = r[w];
      while (m) {
        int bit = std::countr_zero(m);
        out.push_back(w * 64 + bit);
        m &= m - 1;
      }
    }
    return out;
  }
  template <class F>
  void for_each(int k, F f) const {
    for (int e : collect(k)) f(e);
  }
};

void bank_union(BitBank& dst, int dr, const BitBank& src, int sr) {
  std::uint64_t* d = dst.row(dr);
  const std::uint64_t* s = src.row(sr);
  for (int w = 0; w < dst.words; ++w) d[w] |= s[w];
}

template <class Bank>
void forward_prop(const Graph& g, Bank& X) {
  int n = g.num_independent();
  int ell = g.num_nodes();
  for (int k = n; k < ell; ++k) {
    const Graph::Node& nd = g.node(k);
    if (nd.a < 0) continue;
    bank_union(X, k, X, nd.a);
    if (nd.b != nd.a) bank_union(X, k, X, nd.b);
  }
}

template <class Bank>
Pattern forward_jacobian_impl(const Graph& g, const IndexSet& J) {
  int n = g.num_independent();
  int m = g.num_dependent();
  Bank X(g.num_nodes(), n);
  for (int j : J) X.seed(j, j);
  forward_prop(g, X);
  Pattern p(m, n);
  for (int i = 0; i < m; ++i)
    p.row(i) = IndexSet(X.collect(g.dep_node(i)));
  return p;
}

template <class Bank>
Pattern reverse_jacobian_impl(const Graph& g, const IndexSet& I) {
  int n = g.num_independent();
  int m = g.num_dependent();
  int ell = g.num_nodes();
  Bank Y(ell, m);
  for (int i : I) Y.seed(g.dep_node(i), i);
  for (int k = ell - 1; k >= n; --k) {
    const Graph::Node& nd = g.node(k);
    if (nd.a < 0) continue;
    bank_union(Y, nd.a, Y, k);
    if (nd.b != nd.a) bank_union(Y, nd.b, Y, k);
  }
  Pattern p(n, m);
  for (int j = 0; j < n; ++j) p.row(j) = IndexSet(Y.collect(j));
  return p;
}

template <class Bank>
Pattern forward_hessian_impl(const Graph& g, const IndexSet& J,
                             const ActivitySeq& act) {
  int n = g.num_independent();
  int ell = g.num_nodes();
  Bank X(ell, n);
  for (int j : J) X.seed(j, j);
  forward_prop(g, X);

  Bank N(n, n);
  for (int k = n; k < ell; ++k) {
    if (!act.d[k]) continue;
    const Graph::Node& nd = g.node(k);
    Linearity lin = linearity(nd.tag);
    if (!(lin.left || lin.right || lin.joint)) continue;
    int a = nd.a, b = nd.b;
    if (arity(nd.tag) == 1) {
      X.for_each(a, [&](int j) { bank_union(N, j, X, a); });
      continue;
    }
    // One union with X_k covers both contributions when the joint term
    // shares a side with the left (or right) term.
    int src_a = (lin.left && lin.joint) ? k : lin.left ? a : lin.joint ? b : -1;
    int src_b = (lin.right && lin.joint) ? k : lin.right ? b : lin.joint ? a : -1;
    if (src_a >= 0) X.for_each(a, [&](int j) { bank_union(N, j, X, src_a); });
    if (src_b >= 0) X.for_each(b, [&](int j) { bank_union(N, j, X, src_b); });
  }

  Pattern p(n, n);
  for (int j = 0; j < n; ++j) p.row(j) = IndexSet(N.collect(j));
  return p;
}

template <class Bank>
Pattern reverse_hessian_impl(const Graph& g, const IndexSet& J,
                             const ActivitySeq& act) {
  int n = g.num_independent();
  int ell = g.num_nodes();
  Bank X(ell, n);
  for (int j : J) X.seed(j, j);
  forward_prop(g, X);

  Bank M(ell, n);
  for (int k = ell - 1; k >= n; --k) {
    if (!act.d[k]) continue;
    const Graph::Node& nd = g.node(k);
    int a = nd.a, b = nd.b;
    if (a < 0) continue;
    bank_union(M, a, M, k);
    if (b != a) bank_union(M, b, M, k);
    Linearity lin = linearity(nd.tag);
    if (!(lin.left || lin.right || lin.joint)) continue;
    if (arity(nd.tag) == 1) {
      bank_union(M, a, X, a);
      continue;
    }
    int src_a = (lin.left && (lin.right || lin.joint)) ? k
                : lin.left                             ? a
                : (lin.right || lin.joint)             ? b
                                                       : -1;
    int src_b = (lin.right && (lin.left || lin.joint)) ? k
                : lin.right                            ? b
                : (lin.left || lin.joint)              ? a
                                                       : -1;
    if (src_a >= 0) bank_union(M, a, X, src_a);
    if (src_b >= 0) bank_union(M, b, X, src_b);
  }

  // Restrict to the selected rows, then close under symmetry.
  std::vector<std::vector<int>> rows(n);
  for (int j : J) {
    for (int p : M.collect(j)) {
      rows[j].push_back(p);
      rows[p].push_back(j);
    }
  }
  Pattern p(n, n);
  for (int j = 0; j < n; ++j) p.row(j) = IndexSet(std::move(rows[j]));
  return p;
}

}  // namespace

ActivitySeq init_activity(const Graph& g, const IndexSet& J, const IndexSet& I) {
  int n = g.num_independent();
  int m = g.num_dependent();
  int ell = g.num_nodes();
  check_selection(J, n, "independent");
  check_selection(I, m, "dependent");

  ActivitySeq act;
  act.c.assign(ell, 0);
  act.d.assign(ell, 0);

  std::vector<std::uint8_t> active(ell, 0);
  for (int j : J) active[j] = 1;
  for (int k = n; k < ell; ++k) {
    const Graph::Node& nd = g.node(k);
    if (nd.a >= 0)
      active[k] = active[nd.a] || (nd.b != nd.a && active[nd.b]);
  }
  for (int k = 0; k < ell; ++k) act.c[k] = active[k] ? 0 : m + 1;

  for (int i : I) act.d[g.dep_node(i)] = 1;
  for (int k = ell - 1; k >= n; --k) {
    if (!act.d[k]) continue;
    const Graph::Node& nd = g.node(k);
    if (nd.a >= 0) {
      act.d[nd.a] = 1;
      act.d[nd.b] = 1;
    }
  }
  return act;
}

Pattern forward_jacobian_sparsity(const Graph& g, const IndexSet& J,
                                  int dense_threshold) {
  check_selection(J, g.num_independent(), "independent");
  if (J.size() > dense_threshold) return forward_jacobian_impl<BitBank>(g, J);
  return forward_jacobian_impl<VecBank>(g, J);
}

Pattern reverse_jacobian_sparsity(const Graph& g, const IndexSet& I,
                                  int dense_threshold) {
  check_selection(I, g.num_dependent(), "dependent");
  if (I.size() > dense_threshold) return reverse_jacobian_impl<BitBank>(g, I);
  return reverse_jacobian_impl<VecBank>(g, I);
}

Pattern forward_hessian_sparsity(const Graph& g, const IndexSet& J,
                                 const IndexSet& w_support,
                                 int dense_threshold) {
  ActivitySeq act = init_activity(g, J, w_support);
  if (J.size() > dense_threshold)
    return forward_hessian_impl<BitBank>(g, J, act);
  return forward_hessian_impl<VecBank>(g, J, act);
}

Pattern reverse_hessian_sparsity(const Graph& g, const IndexSet& J,
                                 const IndexSet& w_support,
                                 int dense_threshold) {
  ActivitySeq act = init_activity(g, J, w_support);
  if (J.size() > dense_threshold)
    return reverse_hessian_impl<BitBank>(g, J, act);
  return reverse_hessian_impl<VecBank>(g, J, act);
}

}  // namespace sparsead
