#include "sparsead/coloring.hpp"

#include <stdexcept>
#include <string>

namespace sparsead {

namespace {

long g_greedy_calls = 0;

std::vector<std::vector<int>> rows_per_column(const Pattern& p) {
  std::vector<std::vector<int>> colrows(p.ncols());
  for (int i = 0; i < p.nrows(); ++i) {
    for (int j : p.row(i)) colrows[j].push_back(i);
  }
  return colrows;
}

void check_coloring_shape(const Pattern& p, const Coloring& c, int count) {
  if (static_cast<int>(c.color.size()) != count) {
    throw std::invalid_argument("coloring: size does not match pattern");
  }
  for (int col : c.color) {
    if (col < 0 || col >= c.num_colors) {
      throw std::invalid_argument("coloring: color id out of range");
    }
  }
  (void)p;
}

}  // namespace

Coloring identity_coloring(int count) {
  if (count < 0) throw std::invalid_argument("coloring: negative count");
  Coloring c;
  c.color.resize(count);
  for (int j = 0; j < count; ++j) c.color[j] = j;
  c.num_colors = count;
  return c;
}

Coloring color_columns_distance2(const Pattern& p) {
  ++g_greedy_calls;
  int n = p.ncols();
  auto colrows = rows_per_column(p);
  Coloring c;
  c.color.assign(n, -1);
  std::vector<int> forbidden(n + 1, -1);
  for (int j = 0; j < n; ++j) {
    for (int i : colrows[j]) {
      for (int j2 : p.row(i)) {
        int col = c.color[j2];
        if (col >= 0) forbidden[col] = j;
      }
    }
    int pick = 0;
    while (forbidden[pick] == j) ++pick;
    c.color[j] = pick;
    if (pick + 1 > c.num_colors) c.num_colors = pick + 1;
  }
  if (n > 0 && c.num_colors == 0) c.num_colors = 1;
  return c;
}

Coloring color_rows_distance2(const Pattern& p) {
  return color_columns_distance2(p.transposed());
}

Coloring color_star(const Pattern& p) {
  ++g_greedy_calls;
  if (p.nrows() != p.ncols() || !p.symmetric()) {
    throw std::invalid_argument("color_star: pattern is not symmetric");
  }
  int n = p.nrows();
  Coloring c;
  c.color.assign(n, -1);
  auto& color = c.color;

  // Would giving v this color complete a two-colored path on four vertices
  // among the already colored vertices (or collide with a neighbor)?
  auto valid = [&](int v, int cand) {
    for (int u : p.row(v)) {
      if (u != v && color[u] == cand) return false;
    }
    // v as an endpoint: v(cand) - u - w(cand) - x(color of u)
    for (int u : p.row(v)) {
      if (u == v || color[u] < 0) continue;
      for (int w : p.row(u)) {
        if (w == v || w == u || color[w] != cand) continue;
        for (int x : p.row(w)) {
          if (x != u && x != w && color[x] == color[u]) return false;
        }
      }
    }
    // v interior: a - v - b - x with color(a) == color(b), color(x) == cand
    for (int a : p.row(v)) {
      if (a == v || color[a] < 0) continue;
      for (int b : p.row(v)) {
        if (b == v || b == a || color[b] != color[a]) continue;
        for (int x : p.row(b)) {
          if (x != v && x != a && x != b && color[x] == cand) return false;
        }
      }
    }
    return true;
  };

  for (int v = 0; v < n; ++v) {
    int cand = 0;
    while (!valid(v, cand)) ++cand;
    color[v] = cand;
    if (cand + 1 > c.num_colors) c.num_colors = cand + 1;
  }
  if (n > 0 && c.num_colors == 0) c.num_colors = 1;
  return c;
}

bool check_distance2_columns(const Pattern& p, const Coloring& c) {
  check_coloring_shape(p, c, p.ncols());
  std::vector<int> seen(c.num_colors, -1);
  for (int i = 0; i < p.nrows(); ++i) {
    for (int j : p.row(i)) {
      int col = c.color[j];
      if (seen[col] == i) return false;
      seen[col] = i;
    }
  }
  return true;
}

bool check_distance2_rows(const Pattern& p, const Coloring& c) {
  return check_distance2_columns(p.transposed(), c);
}

bool check_star(const Pattern& p, const Coloring& c) {
  if (p.nrows() != p.ncols() || !p.symmetric()) {
    throw std::invalid_argument("check_star: pattern is not symmetric");
  }
  check_coloring_shape(p, c, p.nrows());
  int n = p.nrows();
  for (int v = 0; v < n; ++v) {
    for (int u : p.row(v)) {
      if (u != v && c.color[u] == c.color[v]) return false;
    }
  }
  // Every path x - v - u - y around a middle edge (v, u) must use a third
  // color.
  for (int v = 0; v < n; ++v) {
    for (int u : p.row(v)) {
      if (u <= v) continue;
      for (int x : p.row(v)) {
        if (x == v || x == u || c.color[x] != c.color[u]) continue;
        for (int y : p.row(u)) {
          if (y == u || y == v || y == x) continue;
          if (c.color[y] == c.color[v]) return false;
        }
      }
    }
  }
  return true;
}

long greedy_coloring_count() { return g_greedy_calls; }

SeedPlan build_seed(const Pattern& p, const Coloring& c, bool symmetric) {
  check_coloring_shape(p, c, p.ncols());
  if (symmetric && (p.nrows() != p.ncols() || !p.symmetric())) {
    throw std::invalid_argument("seed: symmetric recovery needs a symmetric pattern");
  }
  SeedPlan plan;
  plan.seed = Mat(p.ncols(), c.num_colors > 0 ? c.num_colors : 1);
  for (int j = 0; j < p.ncols(); ++j) plan.seed(j, c.color[j]) = 1.0;

  auto unique_in_row = [&](int i, int j) {
    int hits = 0;
    for (int j2 : p.row(i)) {
      if (c.color[j2] == c.color[j]) ++hits;
    }
    return hits == 1;
  };

  plan.where.resize(p.nrows());
  for (int i = 0; i < p.nrows(); ++i) {
    plan.where[i].reserve(p.row(i).size());
    for (int j : p.row(i)) {
      if (unique_in_row(i, j)) {
        plan.where[i].push_back(CellRef{i, c.color[j]});
      } else if (symmetric && unique_in_row(j, i)) {
        plan.where[i].push_back(CellRef{j, c.color[i]});
      } else {
        throw std::invalid_argument(
            "seed: coloring cannot recover entry (" + std::to_string(i + 1) +
            ", " + std::to_string(j + 1) + ")");
      }
    }
  }
  return plan;
}

std::vector<std::vector<double>> recover(const Pattern& p, const SeedPlan& plan,
                                         const Mat& b) {
  if (b.cols != plan.seed.cols ||
      static_cast<int>(plan.where.size()) != p.nrows()) {
    throw std::invalid_argument("recover: compressed product has wrong shape");
  }
  std::vector<std::vector<double>> vals(p.nrows());
  for (int i = 0; i < p.nrows(); ++i) {
    const auto& refs = plan.where[i];
    vals[i].reserve(refs.size());
    for (const CellRef& r : refs) {
      if (r.row < 0 || r.row >= b.rows) {
        throw std::invalid_argument("recover: compressed product has wrong shape");
      }
      vals[i].push_back(b(r.row, r.col));
    }
  }
  return vals;
}

}  // namespace sparsead
