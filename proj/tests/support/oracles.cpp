#include "support/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <random>
#include <stdexcept>

namespace testsupport {

using sparsead::OpTag;

std::vector<std::vector<std::uint64_t>> node_reach(const Graph& g) {
  int ell = g.num_nodes();
  int words = (ell + 63) / 64;
  std::vector<std::vector<std::uint64_t>> reach(
      ell, std::vector<std::uint64_t>(words, 0));
  for (int k = 0; k < ell; ++k) {
    reach[k][k / 64] |= std::uint64_t{1} << (k % 64);
    if (g.is_independent(k)) continue;
    const Graph::Node& nd = g.node(k);
    for (int op : {static_cast<int>(nd.a), static_cast<int>(nd.b)}) {
      if (op < 0) continue;
      for (int w = 0; w < words; ++w) reach[k][w] |= reach[op][w];
    }
  }
  return reach;
}

bool reach_has(const std::vector<std::vector<std::uint64_t>>& reach, int k,
               int j) {
  return (reach[k][j / 64] >> (j % 64)) & 1;
}

Pattern reach_jacobian(const Graph& g) {
  auto reach = node_reach(g);
  int n = g.num_independent();
  int m = g.num_dependent();
  Pattern p(m, n);
  for (int i = 0; i < m; ++i) {
    std::vector<int> row;
    for (int j = 0; j < n; ++j)
      if (reach_has(reach, g.dep_node(i), j)) row.push_back(j);
    p.row(i) = sparsead::IndexSet(std::move(row));
  }
  return p;
}

std::vector<double> eval_f(const Graph& g, const std::vector<double>& x) {
  return eval_zero(g, x).y;
}

double eval_weighted(const Graph& g, const std::vector<double>& w,
                     const std::vector<double>& x) {
  std::vector<double> y = eval_f(g, x);
  double acc = 0.0;
  for (int i = 0; i < g.num_dependent(); ++i) acc += w[i] * y[i];
  return acc;
}

Mat fd_jacobian(const Graph& g, const std::vector<double>& x) {
  int n = g.num_independent();
  int m = g.num_dependent();
  Mat out(m, n);
  std::vector<double> xp = x;
  for (int j = 0; j < n; ++j) {
    double h = 1e-6 * std::max(1.0, std::abs(x[j]));
    xp[j] = x[j] + h;
    std::vector<double> yp = eval_f(g, xp);
    xp[j] = x[j] - h;
    std::vector<double> ym = eval_f(g, xp);
    xp[j] = x[j];
    for (int i = 0; i < m; ++i) out(i, j) = (yp[i] - ym[i]) / (2.0 * h);
  }
  return out;
}

Mat fd_hessian(const Graph& g, const std::vector<double>& w,
               const std::vector<double>& x, double h) {
  int n = g.num_independent();
  Mat out(n, n);
  std::vector<double> xp = x;
  auto gval = [&]() { return eval_weighted(g, w, xp); };
  double g0 = gval();
  for (int j = 0; j < n; ++j) {
    xp[j] = x[j] + h;
    double gp = gval();
    xp[j] = x[j] - h;
    double gm = gval();
    xp[j] = x[j];
    out(j, j) = (gp - 2.0 * g0 + gm) / (h * h);
    for (int k = j + 1; k < n; ++k) {
      xp[j] = x[j] + h;
      xp[k] = x[k] + h;
      double gpp = gval();
      xp[k] = x[k] - h;
      double gpm = gval();
      xp[j] = x[j] - h;
      double gmm = gval();
      xp[k] = x[k] + h;
      double gmp = gval();
      xp[j] = x[j];
      xp[k] = x[k];
      double v = (gpp - gpm - gmp + gmm) / (4.0 * h * h);
      out(j, k) = v;
      out(k, j) = v;
    }
  }
  return out;
}

TraceResult trace_sorted_subgraph(const Graph& g, int dep,
                                  std::vector<int>& marks) {
  int n = g.num_independent();
  const int visited = dep + 1;
  const int done = -(dep + 1);
  const int ignore = g.num_dependent() + 1;

  TraceResult tr;
  tr.exams.assign(g.num_nodes(), 0);
  std::vector<int> stack{g.dep_node(dep)};
  auto settled = [&](int k) {
    return marks[k] == done || marks[k] == ignore;
  };
  while (!stack.empty()) {
    int k = stack.back();
    ++tr.exams[k];
    const Graph::Node& nd = g.node(k);
    if (nd.a < 0 || (settled(nd.a) && (nd.b == nd.a || settled(nd.b)))) {
      stack.pop_back();
      tr.nodes.push_back(k);
      marks[k] = done;
      continue;
    }
    int hi = std::max(nd.a, nd.b);
    int lo = std::min(nd.a, nd.b);
    int nops = hi != lo ? 2 : 1;
    int ops[2] = {hi, lo};
    for (int t = 0; t < nops; ++t) {
      int nu = ops[t];
      if (marks[nu] == visited || settled(nu)) continue;
      if (nu < n) {
        tr.nodes.push_back(nu);
        marks[nu] = done;
      } else {
        stack.push_back(nu);
        marks[nu] = visited;
      }
    }
  }
  return tr;
}

namespace {

struct AdjList {
  int v = 0;
  std::vector<std::vector<int>> nbr;
};

// Columns that share a row conflict under distance-2 coloring.
AdjList distance2_conflicts(const Pattern& p) {
  AdjList a;
  a.v = p.ncols();
  a.nbr.resize(a.v);
  std::vector<std::vector<bool>> seen(a.v, std::vector<bool>(a.v, false));
  for (int i = 0; i < p.nrows(); ++i) {
    const auto& cols = p.row(i).indices();
    for (std::size_t s = 0; s < cols.size(); ++s)
      for (std::size_t t = s + 1; t < cols.size(); ++t) {
        int u = cols[s], w = cols[t];
        if (!seen[u][w]) {
          seen[u][w] = seen[w][u] = true;
          a.nbr[u].push_back(w);
          a.nbr[w].push_back(u);
        }
      }
  }
  return a;
}

AdjList pattern_adjacency(const Pattern& p) {
  AdjList a;
  a.v = p.ncols();
  a.nbr.resize(a.v);
  for (int i = 0; i < p.nrows(); ++i)
    for (int j : p.row(i))
      if (i != j) a.nbr[i].push_back(j);
  return a;
}

bool proper_search(const AdjList& a, int k, int v, std::vector<int>& color) {
  if (v == a.v) return true;
  int used = 0;
  for (int u = 0; u < v; ++u) used = std::max(used, color[u] + 1);
  int limit = std::min(k, used + 1);
  for (int c = 0; c < limit; ++c) {
    bool ok = true;
    for (int u : a.nbr[v])
      if (u < v && color[u] == c) {
        ok = false;
        break;
      }
    if (!ok) continue;
    color[v] = c;
    if (proper_search(a, k, v + 1, color)) return true;
  }
  color[v] = -1;
  return false;
}

// True when giving v color c closes a two-colored path on four vertices
// among the already-colored prefix.
bool closes_bicolored_p4(const AdjList& a, const std::vector<int>& color,
                         int v, int c) {
  // v interior: x - u - v - w with color[u] == color[w], color[x] == c.
  for (int u : a.nbr[v]) {
    if (u >= v || color[u] < 0) continue;
    for (int w : a.nbr[v]) {
      if (w >= v || w == u || color[w] != color[u]) continue;
      for (int x : a.nbr[u])
        if (x < v && x != v && color[x] == c) return true;
    }
  }
  // v endpoint: v - u - x - y with color[x] == c, color[y] == color[u].
  for (int u : a.nbr[v]) {
    if (u >= v || color[u] < 0) continue;
    for (int x : a.nbr[u]) {
      if (x >= v || x == v || color[x] != c) continue;
      for (int y : a.nbr[x])
        if (y < v && y != u && color[y] == color[u]) return true;
    }
  }
  return false;
}

bool star_search(const AdjList& a, int k, int v, std::vector<int>& color) {
  if (v == a.v) return true;
  int used = 0;
  for (int u = 0; u < v; ++u) used = std::max(used, color[u] + 1);
  int limit = std::min(k, used + 1);
  for (int c = 0; c < limit; ++c) {
    bool ok = true;
    for (int u : a.nbr[v])
      if (u < v && color[u] == c) {
        ok = false;
        break;
      }
    if (ok && closes_bicolored_p4(a, color, v, c)) ok = false;
    if (!ok) continue;
    color[v] = c;
    if (star_search(a, k, v + 1, color)) return true;
  }
  color[v] = -1;
  return false;
}

}  // namespace

int min_distance2_colors(const Pattern& p, int max_colors) {
  AdjList a = distance2_conflicts(p);
  if (a.v == 0) return 0;
  for (int k = 1; k <= max_colors; ++k) {
    std::vector<int> color(a.v, -1);
    if (proper_search(a, k, 0, color)) return k;
  }
  return -1;
}

int min_star_colors(const Pattern& p, int max_colors) {
  AdjList a = pattern_adjacency(p);
  if (a.v == 0) return 0;
  for (int k = 1; k <= max_colors; ++k) {
    std::vector<int> color(a.v, -1);
    if (star_search(a, k, 0, color)) return k;
  }
  return -1;
}

Mat dense_from(const sparsead::SparseMatrixValues& sm) {
  Mat out(sm.pattern.nrows(), sm.pattern.ncols());
  std::size_t pos = 0;
  for (int i = 0; i < sm.pattern.nrows(); ++i)
    for (int j : sm.pattern.row(i)) out(i, j) = sm.values[pos++];
  return out;
}

Mat dense_from_upper(const sparsead::SparseMatrixValues& sm) {
  Mat out = dense_from(sm);
  for (int i = 0; i < out.rows; ++i)
    for (int j = i + 1; j < out.cols; ++j) out(j, i) = out(i, j);
  return out;
}

bool rel_close(double a, double b, double tol) {
  double scale = std::max({1.0, std::abs(a), std::abs(b)});
  return std::abs(a - b) <= tol * scale;
}

double max_rel_diff(const Mat& a, const Mat& b) {
  double worst = 0.0;
  for (int i = 0; i < a.rows; ++i)
    for (int j = 0; j < a.cols; ++j) {
      double scale = std::max({1.0, std::abs(a(i, j)), std::abs(b(i, j))});
      worst = std::max(worst, std::abs(a(i, j) - b(i, j)) / scale);
    }
  return worst;
}

namespace {

struct GraphDraw {
  std::mt19937_64& rng;
  int n;
  std::vector<Graph::Node> ops;

  int cur() const { return n + static_cast<int>(ops.size()); }
  int emit(OpTag t, int a, int b, double c = 0.0) {
    ops.push_back({t, static_cast<std::int32_t>(a),
                   static_cast<std::int32_t>(b), c});
    return cur() - 1;
  }
  int unary(OpTag t, int u, double c = 0.0) { return emit(t, u, u, c); }
  int pick() { return static_cast<int>(rng() % static_cast<unsigned>(cur())); }
  double u01() { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }
  double draw(double lo, double hi) { return lo + u01() * (hi - lo); }
  double sign() { return (rng() & 1) ? 1.0 : -1.0; }

  // Nonlinear and domain-restricted operations are wrapped in small guard
  // expressions (squares plus a positive shift, damped arguments) so that a
  // finite evaluation point with moderate node values always exists.
  void emit_pattern() {
    switch (rng() % 21) {
      case 0: emit(OpTag::Add, pick(), pick()); break;
      case 1: emit(OpTag::Sub, pick(), pick()); break;
      case 2: emit(OpTag::Mul, pick(), pick()); break;
      case 3: unary(OpTag::Neg, pick()); break;
      case 4: unary(OpTag::Sin, pick()); break;
      case 5: unary(OpTag::Cos, pick()); break;
      case 6: unary(OpTag::Copy, pick()); break;
      case 7: unary(OpTag::AddConst, pick(), draw(-2.0, 2.0)); break;
      case 8: unary(OpTag::SubConstL, pick(), draw(-2.0, 2.0)); break;
      case 9: unary(OpTag::SubConstR, pick(), draw(-2.0, 2.0)); break;
      case 10: unary(OpTag::MulConst, pick(), sign() * draw(0.25, 1.5)); break;
      case 11: unary(OpTag::DivConstR, pick(), sign() * draw(0.5, 2.0)); break;
      case 12: emit(OpTag::Const, -1, -1, draw(-2.0, 2.0)); break;
      case 13: unary(OpTag::Exp, unary(OpTag::MulConst, pick(), 0.25)); break;
      case 14: unary(OpTag::Log, shifted_square(0.5)); break;
      case 15: unary(OpTag::Sqrt, shifted_square(0.25)); break;
      case 16: {
        int a = pick();
        emit(OpTag::Div, a, shifted_square(0.5));
        break;
      }
      case 17: {
        int base = shifted_square(0.5);
        int expo = unary(OpTag::MulConst, pick(), 0.25);
        emit(OpTag::Pow, base, expo);
        break;
      }
      case 18:
        unary(OpTag::PowConstExp, shifted_square(0.5), draw(0.5, 2.5));
        break;
      case 19: unary(OpTag::PowConstBase, pick(), draw(0.5, 2.0)); break;
      default: unary(OpTag::DivConstL, shifted_square(0.5), draw(0.5, 2.0));
    }
  }

  int shifted_square(double shift) {
    int u = pick();
    return unary(OpTag::AddConst, emit(OpTag::Mul, u, u), shift);
  }

  void emit_dependent() {
    switch (rng() % 5) {
      case 0: unary(OpTag::Copy, pick()); break;
      case 1: emit(OpTag::Add, pick(), pick()); break;
      case 2: emit(OpTag::Mul, pick(), pick()); break;
      case 3: unary(OpTag::Sin, pick()); break;
      default: unary(OpTag::AddConst, pick(), draw(-1.0, 1.0));
    }
  }
};

bool safe_point(const Graph& g, std::mt19937_64& rng, std::vector<double>& x) {
  int n = g.num_independent();
  for (int attempt = 0; attempt < 300; ++attempt) {
    x.resize(n);
    for (double& xj : x)
      xj = static_cast<double>(rng() >> 11) * 0x1.0p-53 * 2.0 - 1.0;
    try {
      sparsead::EvalResult r = eval_zero(g, x);
      bool ok = true;
      for (double v : r.v)
        if (!std::isfinite(v) || std::abs(v) > 10.0) {
          ok = false;
          break;
        }
      if (ok) return true;
    } catch (const std::exception&) {
    }
  }
  return false;
}

}  // namespace

std::vector<CorpusItem> build_corpus(int count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<CorpusItem> out;
  out.reserve(count);
  int attempts = 0;
  while (static_cast<int>(out.size()) < count) {
    if (++attempts > 60 * count)
      throw std::runtime_error("corpus generation stalled");
    GraphDraw d{rng, 1 + static_cast<int>(rng() % 10), {}};
    int m = 1 + static_cast<int>(rng() % 6);
    int budget = static_cast<int>(rng() % 70);
    int cap = 120 - d.n - m - 4;
    while (static_cast<int>(d.ops.size()) < budget &&
           static_cast<int>(d.ops.size()) < cap)
      d.emit_pattern();
    for (int i = 0; i < m; ++i) d.emit_dependent();

    Graph g(d.n, m, std::move(d.ops));
    std::vector<double> x;
    if (!safe_point(g, rng, x)) continue;
    std::vector<double> w(m);
    for (double& wi : w) wi = ((rng() & 1) ? 1.0 : -1.0) / m;
    out.push_back({std::move(g), std::move(x), std::move(w)});
  }
  return out;
}

}  // namespace testsupport
