#include "sparsead/sweeps.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "sparsead/op_kind.hpp"

namespace sparsead {

namespace {

Partials checked_partials(const Graph& g, int k, const std::vector<double>& v) {
  const Graph::Node& nd = g.node(k);
  double ua = nd.a >= 0 ? v[nd.a] : 0.0;
  double ub = nd.b >= 0 ? v[nd.b] : 0.0;
  Partials p = partials(nd.tag, nd.c, ua, ub);
  if (!std::isfinite(p.d1) || !std::isfinite(p.d2)) {
    throw std::domain_error("sweep: non-finite partial derivative at node " +
                            std::to_string(k + 1) + " (" +
                            std::string(op_name(nd.tag)) + ")");
  }
  return p;
}

Partials2 checked_partials2(const Graph& g, int k, const std::vector<double>& v) {
  const Graph::Node& nd = g.node(k);
  double ua = nd.a >= 0 ? v[nd.a] : 0.0;
  double ub = nd.b >= 0 ? v[nd.b] : 0.0;
  Partials2 p = partials2(nd.tag, nd.c, ua, ub);
  if (!std::isfinite(p.d11) || !std::isfinite(p.d12) || !std::isfinite(p.d22)) {
    throw std::domain_error("sweep: non-finite second partial at node " +
                            std::to_string(k + 1) + " (" +
                            std::string(op_name(nd.tag)) + ")");
  }
  return p;
}

void check_vector(const std::vector<double>& w, std::size_t want,
                  const char* what) {
  if (w.size() != want) {
    throw std::invalid_argument(std::string("sweep: ") + what +
                                " has wrong length");
  }
  for (double x : w) {
    if (!std::isfinite(x)) {
      throw std::invalid_argument(std::string("sweep: non-finite entry in ") +
                                  what);
    }
  }
}

void check_mat(const Mat& a, int rows, const char* what) {
  if (a.rows != rows || a.cols < 1) {
    throw std::invalid_argument(std::string("sweep: ") + what +
                                " has wrong shape");
  }
  for (double x : a.data) {
    if (!std::isfinite(x)) {
      throw std::invalid_argument(std::string("sweep: non-finite entry in ") +
                                  what);
    }
  }
}

}  // namespace

Mat forward_one(const Graph& g, const std::vector<double>& x, const Mat& xdot) {
  int n = g.num_independent();
  int m = g.num_dependent();
  int ell = g.num_nodes();
  check_mat(xdot, n, "xdot");
  int r = xdot.cols;

  std::vector<double> v = eval_zero(g, x).v;
  Mat vdot(ell, r);
  std::copy(xdot.data.begin(), xdot.data.end(), vdot.data.begin());

  for (int k = n; k < ell; ++k) {
    const Graph::Node& nd = g.node(k);
    if (nd.a < 0) continue;  // constant node, tangent stays zero
    Partials p = checked_partials(g, k, v);
    for (int dir = 0; dir < r; ++dir) {
      vdot(k, dir) = p.d1 * vdot(nd.a, dir) + p.d2 * vdot(nd.b, dir);
    }
  }

  Mat ydot(m, r);
  for (int i = 0; i < m; ++i) {
    for (int dir = 0; dir < r; ++dir) {
      ydot(i, dir) = vdot(g.dep_node(i), dir);
    }
  }
  return ydot;
}

std::vector<double> reverse_one(const Graph& g, const std::vector<double>& v,
                                const std::vector<double>& w) {
  int n = g.num_independent();
  int m = g.num_dependent();
  int ell = g.num_nodes();
  check_vector(v, static_cast<std::size_t>(ell), "v");
  check_vector(w, static_cast<std::size_t>(m), "w");

  std::vector<double> vbar(ell, 0.0);
  for (int i = 0; i < m; ++i) vbar[g.dep_node(i)] += w[i];

  for (int k = ell - 1; k >= n; --k) {
    const Graph::Node& nd = g.node(k);
    if (nd.a < 0) continue;
    Partials p = checked_partials(g, k, v);
    double bk = vbar[k];
    vbar[nd.a] += p.d1 * bk;
    vbar[nd.b] += p.d2 * bk;
  }

  vbar.resize(n);
  return vbar;
}

Mat reverse_many(const Graph& g, const std::vector<double>& v, const Mat& w) {
  int n = g.num_independent();
  int m = g.num_dependent();
  int ell = g.num_nodes();
  check_vector(v, static_cast<std::size_t>(ell), "v");
  check_mat(w, m, "w");
  int q = w.cols;

  Mat vbar(ell, q);
  for (int i = 0; i < m; ++i) {
    for (int dir = 0; dir < q; ++dir) vbar(g.dep_node(i), dir) += w(i, dir);
  }

  for (int k = ell - 1; k >= n; --k) {
    const Graph::Node& nd = g.node(k);
    if (nd.a < 0) continue;
    Partials p = checked_partials(g, k, v);
    for (int dir = 0; dir < q; ++dir) {
      double bk = vbar(k, dir);
      vbar(nd.a, dir) += p.d1 * bk;
      vbar(nd.b, dir) += p.d2 * bk;
    }
  }

  Mat xbar(n, q);
  std::copy(vbar.data.begin(), vbar.data.begin() + static_cast<std::ptrdiff_t>(n) * q,
            xbar.data.begin());
  return xbar;
}

SparseRow reverse_subgraph(const Graph& g, const std::vector<double>& v,
                           const SortedSubgraph& sub, const MarkVector& marks,
                           std::vector<double>& vbar) {
  int n = g.num_independent();
  int ell = g.num_nodes();
  check_vector(v, static_cast<std::size_t>(ell), "v");
  if (vbar.size() != static_cast<std::size_t>(ell)) {
    throw std::invalid_argument("sweep: vbar workspace has wrong length");
  }
  const int ignore = g.num_dependent() + 1;

  vbar[g.dep_node(sub.dep)] = 1.0;
  for (auto it = sub.nodes.rbegin(); it != sub.nodes.rend(); ++it) {
    int k = *it;
    if (k < n) continue;
    const Graph::Node& nd = g.node(k);
    if (nd.a < 0) continue;
    Partials p = checked_partials(g, k, v);
    double bk = vbar[k];
    if (marks.c[nd.a] != ignore) vbar[nd.a] += p.d1 * bk;
    if (marks.c[nd.b] != ignore) vbar[nd.b] += p.d2 * bk;
  }

  SparseRow row;
  for (int k : sub.nodes) {
    if (k < n) {
      row.cols.push_back(k);
      row.vals.push_back(vbar[k]);
    }
  }
  for (int k : sub.nodes) vbar[k] = 0.0;

  std::vector<int> order(row.cols.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int i, int j) { return row.cols[i] < row.cols[j]; });
  SparseRow out;
  out.cols.reserve(order.size());
  out.vals.reserve(order.size());
  for (int i : order) {
    out.cols.push_back(row.cols[i]);
    out.vals.push_back(row.vals[i]);
  }
  return out;
}

std::vector<double> hess_vec(const Graph& g, const std::vector<double>& x,
                             const std::vector<double>& w,
                             const std::vector<double>& u) {
  Mat udirs(static_cast<int>(u.size()), 1);
  udirs.data = u;
  Mat hu = hess_vec_many(g, x, w, udirs);
  return hu.data;
}

Mat hess_vec_many(const Graph& g, const std::vector<double>& x,
                  const std::vector<double>& w, const Mat& u) {
  int n = g.num_independent();
  int m = g.num_dependent();
  int ell = g.num_nodes();
  check_vector(w, static_cast<std::size_t>(m), "w");
  check_mat(u, n, "u");
  int r = u.cols;

  std::vector<double> v = eval_zero(g, x).v;

  Mat vdot(ell, r);
  std::copy(u.data.begin(), u.data.end(), vdot.data.begin());
  for (int k = n; k < ell; ++k) {
    const Graph::Node& nd = g.node(k);
    if (nd.a < 0) continue;
    Partials p = checked_partials(g, k, v);
    for (int dir = 0; dir < r; ++dir) {
      vdot(k, dir) = p.d1 * vdot(nd.a, dir) + p.d2 * vdot(nd.b, dir);
    }
  }

  std::vector<double> vbar(ell, 0.0);
  Mat vbardot(ell, r);
  for (int i = 0; i < m; ++i) vbar[g.dep_node(i)] += w[i];

  for (int k = ell - 1; k >= n; --k) {
    const Graph::Node& nd = g.node(k);
    if (nd.a < 0) continue;
    Partials p = checked_partials(g, k, v);
    Partials2 p2 = checked_partials2(g, k, v);
    double bk = vbar[k];
    vbar[nd.a] += p.d1 * bk;
    vbar[nd.b] += p.d2 * bk;
    for (int dir = 0; dir < r; ++dir) {
      double bdk = vbardot(k, dir);
      double da = vdot(nd.a, dir);
      double db = vdot(nd.b, dir);
      vbardot(nd.a, dir) += p.d1 * bdk + p2.d11 * bk * da + p2.d12 * bk * db;
      vbardot(nd.b, dir) += p.d2 * bdk + p2.d12 * bk * da + p2.d22 * bk * db;
    }
  }

  Mat hu(n, r);
  std::copy(vbardot.data.begin(),
            vbardot.data.begin() + static_cast<std::ptrdiff_t>(n) * r,
            hu.data.begin());
  return hu;
}

}  // namespace sparsead
