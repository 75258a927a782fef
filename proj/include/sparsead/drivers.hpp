#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "sparsead/coloring.hpp"
#include "sparsead/graph.hpp"
#include "sparsead/index_set.hpp"
#include "sparsead/pattern.hpp"
#include "sparsead/subgraph.hpp"

namespace sparsead {

struct SparseMatrixValues {
  Pattern pattern;
  std::vector<double> values;  // row-major, ascending columns within each row
};

enum class Method { ForwardCompressed, ReverseCompressed, Subgraph };

struct MethodConfig {
  Method method = Method::Subgraph;
  bool onepass = false;       // batch all seed directions into a single sweep
  bool optimize = false;      // prune the tape before anything else
  bool setup_cached = false;  // informational; Prepared does the actual caching
  bool use_coloring = true;   // compressed only: false seeds every column (row)
};

// Throws std::invalid_argument naming the violated rule.
void check_config(const MethodConfig& cfg);

struct DriverStats {
  int colors = 0;           // seed width used by a compressed method
  int passes = 0;           // sweeps over the tape
  std::int64_t visits = 0;  // subgraph: sum |G_i|; compressed: directions x
                            // interior nodes (doubled for Hessians: each
                            // direction runs a tangent and an adjoint sweep)
};

// One-shot drivers. The restricted variants treat rows outside I and columns
// outside J as structural zeros (for the Hessian both sides are J).
SparseMatrixValues sparse_jacobian(const Graph& g, const std::vector<double>& x,
                                   const MethodConfig& cfg,
                                   DriverStats* stats = nullptr);
SparseMatrixValues sparse_jacobian_restricted(
    const Graph& g, const std::vector<double>& x, const MethodConfig& cfg,
    const IndexSet& J, const IndexSet& I, DriverStats* stats = nullptr);

// Upper triangle (column >= row) of the Hessian of w.f(x).
SparseMatrixValues sparse_hessian(const Graph& g, const std::vector<double>& x,
                                  const std::vector<double>& w,
                                  const MethodConfig& cfg,
                                  DriverStats* stats = nullptr);
SparseMatrixValues sparse_hessian_restricted(
    const Graph& g, const std::vector<double>& x, const std::vector<double>& w,
    const MethodConfig& cfg, const IndexSet& J, DriverStats* stats = nullptr);

namespace detail {

// Everything about a Jacobian computation that does not depend on x.
struct JacSetup {
  Pattern pattern;     // m x n
  Pattern pattern_t;   // reverse path only: n x m orientation
  Coloring col;
  SeedPlan plan;
  MarkVector marks;
  std::vector<SortedSubgraph> subs;
  std::int64_t visits = 0;  // subgraph path: sum |G_i|
};

JacSetup jac_setup(const Graph& g, const MethodConfig& cfg, const IndexSet& J,
                   const IndexSet& I);
SparseMatrixValues jac_eval(const Graph& g, const MethodConfig& cfg,
                            const JacSetup& s, const std::vector<double>& x,
                            DriverStats* stats);

}  // namespace detail

// Setup done once (pattern, coloring, seeds, sorted subgraphs, pruning),
// evaluation repeated at many points. jacobian() is const and uses per-call
// workspaces, so concurrent calls are fine; hessian() caches per-weight-
// support artifacts lazily on first use and is not meant for concurrent use.
class Prepared {
 public:
  Prepared(const Graph& g, const MethodConfig& cfg);

  const Graph& graph() const { return g_; }
  const MethodConfig& config() const { return cfg_; }
  const Pattern& jacobian_pattern() const { return jac_.pattern; }

  SparseMatrixValues jacobian(const std::vector<double>& x,
                              DriverStats* stats = nullptr) const;
  SparseMatrixValues hessian(const std::vector<double>& x,
                             const std::vector<double>& w,
                             DriverStats* stats = nullptr) const;

 private:
  struct HessCache {
    bool valid = false;
    IndexSet supp;
    Pattern full;  // symmetric n x n pattern
    Coloring col;
    SeedPlan plan;
    std::optional<Graph> grad;  // subgraph path: gradient tape from setup
    MarkVector marks;
    std::vector<SortedSubgraph> subs;
    std::int64_t visits = 0;
  };

  Graph g_;
  MethodConfig cfg_;
  detail::JacSetup jac_;
  mutable HessCache hess_;
};

Prepared with_setup_cached(const Graph& g, const MethodConfig& cfg);

}  // namespace sparsead
