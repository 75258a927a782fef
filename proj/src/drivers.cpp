#include "sparsead/drivers.hpp"

#include <stdexcept>

#include "sparsead/sweeps.hpp"

namespace sparsead {

namespace {

Mat seed_column(const Mat& seed, int c) {
  Mat col(seed.rows, 1);
  for (int r = 0; r < seed.rows; ++r) col(r, 0) = seed(r, c);
  return col;
}

// Directions are seeded only for the selected columns (rows); a stray 1 in
// an unselected seed row would leak that column's derivatives into cells the
// restricted coloring believes are unshared.
void zero_rows_outside(Mat& seed, const IndexSet& keep) {
  if (keep.size() == seed.rows) return;
  std::vector<char> in(seed.rows, 0);
  for (int r : keep) in[r] = 1;
  for (int r = 0; r < seed.rows; ++r) {
    if (in[r]) continue;
    for (int c = 0; c < seed.cols; ++c) seed(r, c) = 0.0;
  }
}

void clear_rows_outside(Pattern& p, const IndexSet& keep) {
  if (keep.size() == p.nrows()) return;
  std::vector<char> in(p.nrows(), 0);
  for (int r : keep) in[r] = 1;
  for (int r = 0; r < p.nrows(); ++r) {
    if (!in[r]) p.row(r) = IndexSet{};
  }
}

IndexSet independents_of(const SortedSubgraph& sub, int n) {
  std::vector<int> cols;
  for (int k : sub.nodes) {
    if (k < n) cols.push_back(k);
  }
  return IndexSet(std::move(cols));
}

IndexSet support_of(const std::vector<double>& w) {
  std::vector<int> idx;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] != 0.0) idx.push_back(static_cast<int>(i));
  }
  return IndexSet(std::move(idx));
}

SparseMatrixValues upper_from_full(const Pattern& full,
                                   const std::vector<double>& values) {
  SparseMatrixValues out;
  out.pattern = full.upper_triangle();
  std::size_t pos = 0;
  for (int i = 0; i < full.nrows(); ++i) {
    for (int j : full.row(i)) {
      double val = values[pos++];
      if (j >= i) out.values.push_back(val);
    }
  }
  return out;
}

bool same_structure(const Graph& p, const Graph& q) {
  if (p.num_independent() != q.num_independent() ||
      p.num_dependent() != q.num_dependent() ||
      p.num_nodes() != q.num_nodes()) {
    return false;
  }
  for (int k = p.num_independent(); k < p.num_nodes(); ++k) {
    const Graph::Node& a = p.node(k);
    const Graph::Node& b = q.node(k);
    if (a.tag != b.tag || a.a != b.a || a.b != b.b) return false;
  }
  return true;
}

struct HessSetup {
  Pattern full;
  Coloring col;
  SeedPlan plan;
};

HessSetup hess_setup_compressed(const Graph& g, const MethodConfig& cfg,
                                const IndexSet& J, const IndexSet& supp) {
  HessSetup s;
  s.full = forward_hessian_sparsity(g, J, supp);
  s.col = cfg.use_coloring ? color_star(s.full)
                           : identity_coloring(g.num_independent());
  s.plan = build_seed(s.full, s.col, true);
  zero_rows_outside(s.plan.seed, J);
  return s;
}

SparseMatrixValues hess_eval_compressed(const Graph& g, const MethodConfig& cfg,
                                        const Pattern& full,
                                        const SeedPlan& plan,
                                        const std::vector<double>& x,
                                        const std::vector<double>& w,
                                        DriverStats* stats) {
  int n = g.num_independent();
  int width = plan.seed.cols;
  DriverStats local;
  DriverStats& st = stats ? *stats : local;
  st = DriverStats{};

  Mat b(n, width);
  if (cfg.onepass) {
    b = hess_vec_many(g, x, w, plan.seed);
    st.passes = 2;
  } else {
    std::vector<double> u(n);
    for (int c = 0; c < width; ++c) {
      for (int j = 0; j < n; ++j) u[j] = plan.seed(j, c);
      std::vector<double> hu = hess_vec(g, x, w, u);
      for (int j = 0; j < n; ++j) b(j, c) = hu[j];
    }
    st.passes = 2 * width;
  }
  auto vals = recover(full, plan, b);
  std::vector<double> flat;
  for (auto& rv : vals) flat.insert(flat.end(), rv.begin(), rv.end());
  st.colors = width;
  st.visits = 2LL * width * g.num_interior();
  return upper_from_full(full, flat);
}

}  // namespace

void check_config(const MethodConfig& cfg) {
  if (cfg.method == Method::Subgraph && cfg.onepass) {
    throw std::invalid_argument(
        "config: onepass must be false when the method is subgraph");
  }
}

namespace detail {

JacSetup jac_setup(const Graph& g, const MethodConfig& cfg, const IndexSet& J,
                   const IndexSet& I) {
  JacSetup s;
  int n = g.num_independent();
  int m = g.num_dependent();
  switch (cfg.method) {
    case Method::ForwardCompressed: {
      s.pattern = forward_jacobian_sparsity(g, J);
      clear_rows_outside(s.pattern, I);
      s.col = cfg.use_coloring ? color_columns_distance2(s.pattern)
                               : identity_coloring(n);
      s.plan = build_seed(s.pattern, s.col, false);
      zero_rows_outside(s.plan.seed, J);
      break;
    }
    case Method::ReverseCompressed: {
      s.pattern_t = reverse_jacobian_sparsity(g, I);
      clear_rows_outside(s.pattern_t, J);
      s.col = cfg.use_coloring ? color_columns_distance2(s.pattern_t)
                               : identity_coloring(m);
      s.plan = build_seed(s.pattern_t, s.col, false);
      zero_rows_outside(s.plan.seed, I);
      s.pattern = s.pattern_t.transposed();
      break;
    }
    case Method::Subgraph: {
      ActivitySeq act = init_activity(g, J, I);
      s.marks = MarkVector(act);
      SubgraphStats sg;
      s.pattern = Pattern(m, n);
      s.subs.reserve(I.size());
      for (int i : I) {
        s.subs.push_back(sorted_subgraph(g, i, s.marks, &sg));
        s.pattern.row(i) = independents_of(s.subs.back(), n);
      }
      s.visits = sg.subgraph_nodes;
      break;
    }
  }
  return s;
}

SparseMatrixValues jac_eval(const Graph& g, const MethodConfig& cfg,
                            const JacSetup& s, const std::vector<double>& x,
                            DriverStats* stats) {
  int n = g.num_independent();
  int m = g.num_dependent();
  DriverStats local;
  DriverStats& st = stats ? *stats : local;
  st = DriverStats{};

  SparseMatrixValues out;
  out.pattern = s.pattern;
  switch (cfg.method) {
    case Method::ForwardCompressed: {
      int width = s.plan.seed.cols;
      Mat b(m, width);
      if (cfg.onepass) {
        b = forward_one(g, x, s.plan.seed);
        st.passes = 1;
      } else {
        for (int c = 0; c < width; ++c) {
          Mat col = forward_one(g, x, seed_column(s.plan.seed, c));
          for (int i = 0; i < m; ++i) b(i, c) = col(i, 0);
        }
        st.passes = width;
      }
      auto vals = recover(s.pattern, s.plan, b);
      for (auto& rv : vals) out.values.insert(out.values.end(), rv.begin(), rv.end());
      st.colors = width;
      st.visits = static_cast<std::int64_t>(width) * g.num_interior();
      break;
    }
    case Method::ReverseCompressed: {
      int width = s.plan.seed.cols;
      std::vector<double> v = eval_zero(g, x).v;
      Mat b(n, width);
      if (cfg.onepass) {
        b = reverse_many(g, v, s.plan.seed);
        st.passes = 1;
      } else {
        std::vector<double> wcol(m);
        for (int c = 0; c < width; ++c) {
          for (int i = 0; i < m; ++i) wcol[i] = s.plan.seed(i, c);
          std::vector<double> xbar = reverse_one(g, v, wcol);
          for (int j = 0; j < n; ++j) b(j, c) = xbar[j];
        }
        st.passes = width;
      }
      auto vals = recover(s.pattern_t, s.plan, b);
      std::vector<std::vector<double>> rowvals(m);
      for (int j = 0; j < n; ++j) {
        const auto& row = s.pattern_t.row(j).indices();
        for (std::size_t t = 0; t < row.size(); ++t) {
          rowvals[row[t]].push_back(vals[j][t]);
        }
      }
      for (auto& rv : rowvals) out.values.insert(out.values.end(), rv.begin(), rv.end());
      st.colors = width;
      st.visits = static_cast<std::int64_t>(width) * g.num_interior();
      break;
    }
    case Method::Subgraph: {
      std::vector<double> v = eval_zero(g, x).v;
      std::vector<double> vbar(g.num_nodes(), 0.0);
      for (const SortedSubgraph& sub : s.subs) {
        SparseRow row = reverse_subgraph(g, v, sub, s.marks, vbar);
        out.values.insert(out.values.end(), row.vals.begin(), row.vals.end());
      }
      st.visits = s.visits;
      break;
    }
  }
  return out;
}

}  // namespace detail

SparseMatrixValues sparse_jacobian(const Graph& g, const std::vector<double>& x,
                                   const MethodConfig& cfg, DriverStats* stats) {
  return sparse_jacobian_restricted(g, x, cfg,
                                    IndexSet::full(g.num_independent()),
                                    IndexSet::full(g.num_dependent()), stats);
}

SparseMatrixValues sparse_jacobian_restricted(const Graph& g,
                                              const std::vector<double>& x,
                                              const MethodConfig& cfg,
                                              const IndexSet& J,
                                              const IndexSet& I,
                                              DriverStats* stats) {
  check_config(cfg);
  if (cfg.optimize) {
    Graph g2 = prune(g);
    detail::JacSetup s = detail::jac_setup(g2, cfg, J, I);
    return detail::jac_eval(g2, cfg, s, x, stats);
  }
  detail::JacSetup s = detail::jac_setup(g, cfg, J, I);
  return detail::jac_eval(g, cfg, s, x, stats);
}

SparseMatrixValues sparse_hessian(const Graph& g, const std::vector<double>& x,
                                  const std::vector<double>& w,
                                  const MethodConfig& cfg, DriverStats* stats) {
  return sparse_hessian_restricted(g, x, w, cfg,
                                   IndexSet::full(g.num_independent()), stats);
}

SparseMatrixValues sparse_hessian_restricted(const Graph& g,
                                             const std::vector<double>& x,
                                             const std::vector<double>& w,
                                             const MethodConfig& cfg,
                                             const IndexSet& J,
                                             DriverStats* stats) {
  check_config(cfg);
  if (w.size() != static_cast<std::size_t>(g.num_dependent())) {
    throw std::invalid_argument("hessian: w has wrong length");
  }
  Graph g2 = cfg.optimize ? prune(g) : g;
  if (cfg.method == Method::Subgraph) {
    Graph h = record_gradient_graph(g2, w);
    MethodConfig inner = cfg;
    inner.optimize = false;  // the gradient tape is recorded pruned
    DriverStats st;
    SparseMatrixValues jac = sparse_jacobian_restricted(h, x, inner, J, J, &st);
    SparseMatrixValues out = upper_from_full(jac.pattern, jac.values);
    if (stats) *stats = DriverStats{0, 0, st.visits};
    return out;
  }
  IndexSet supp = support_of(w);
  HessSetup s = hess_setup_compressed(g2, cfg, J, supp);
  return hess_eval_compressed(g2, cfg, s.full, s.plan, x, w, stats);
}

Prepared::Prepared(const Graph& g, const MethodConfig& cfg)
    : g_((check_config(cfg), cfg.optimize ? prune(g) : g)), cfg_(cfg) {
  jac_ = detail::jac_setup(g_, cfg_, IndexSet::full(g_.num_independent()),
                           IndexSet::full(g_.num_dependent()));
}

SparseMatrixValues Prepared::jacobian(const std::vector<double>& x,
                                      DriverStats* stats) const {
  return detail::jac_eval(g_, cfg_, jac_, x, stats);
}

SparseMatrixValues Prepared::hessian(const std::vector<double>& x,
                                     const std::vector<double>& w,
                                     DriverStats* stats) const {
  int n = g_.num_independent();
  if (w.size() != static_cast<std::size_t>(g_.num_dependent())) {
    throw std::invalid_argument("hessian: w has wrong length");
  }
  IndexSet supp = support_of(w);
  IndexSet J = IndexSet::full(n);

  if (cfg_.method == Method::Subgraph) {
    Graph h = record_gradient_graph(g_, w);
    bool reuse = hess_.valid && hess_.supp == supp && hess_.grad &&
                 same_structure(*hess_.grad, h);
    if (!reuse) {
      hess_ = HessCache{};
      hess_.supp = supp;
      ActivitySeq act = init_activity(h, J, IndexSet::full(h.num_dependent()));
      hess_.marks = MarkVector(act);
      SubgraphStats sg;
      hess_.full = Pattern(n, n);
      hess_.subs.reserve(n);
      for (int i = 0; i < n; ++i) {
        hess_.subs.push_back(sorted_subgraph(h, i, hess_.marks, &sg));
        hess_.full.row(i) = independents_of(hess_.subs.back(), n);
      }
      hess_.visits = sg.subgraph_nodes;
      hess_.grad = h;
      hess_.valid = true;
    }
    std::vector<double> v = eval_zero(h, x).v;
    std::vector<double> vbar(h.num_nodes(), 0.0);
    std::vector<double> flat;
    for (const SortedSubgraph& sub : hess_.subs) {
      SparseRow row = reverse_subgraph(h, v, sub, hess_.marks, vbar);
      flat.insert(flat.end(), row.vals.begin(), row.vals.end());
    }
    if (stats) *stats = DriverStats{0, 0, hess_.visits};
    return upper_from_full(hess_.full, flat);
  }

  if (!hess_.valid || !(hess_.supp == supp)) {
    HessSetup s = hess_setup_compressed(g_, cfg_, J, supp);
    hess_ = HessCache{};
    hess_.supp = supp;
    hess_.full = std::move(s.full);
    hess_.col = std::move(s.col);
    hess_.plan = std::move(s.plan);
    hess_.valid = true;
  }
  return hess_eval_compressed(g_, cfg_, hess_.full, hess_.plan, x, w, stats);
}

Prepared with_setup_cached(const Graph& g, const MethodConfig& cfg) {
  return Prepared(g, cfg);
}

}  // namespace sparsead
