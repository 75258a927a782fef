#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sparsead/graph.hpp"
#include "sparsead/pattern.hpp"

namespace sparsead {

// A built-in benchmark function: the recorded tape, a reference pattern
// derived from the definition (Jacobian pattern, or upper-triangle Hessian
// pattern when hessian is set), and default evaluation data. Factories are
// pure: the same parameters always produce the identical tape.
struct ProblemSpec {
  std::string name;
  int n = 0;
  int m = 0;
  bool hessian = false;
  Graph graph;
  Pattern reference;
  std::vector<double> x0;
  std::vector<double> w0;
};

// f(x) = A x with A dense random, entries uniform in [-1, 1] from a fixed
// generator; the tape is the n^2 multiply-add schedule.
ProblemSpec matvec(int n, std::uint64_t seed);

// A sine chain v_{n+k} = sin(v_{n+k-1}) rooted at x_n, with outputs
// y_k = v_{2n} + x_k. Jacobian rows are {k, n} for k < n and {n} for k = n.
ProblemSpec chain(int n);

// Scalar energy on a p x p 4-neighbor grid (n = p^2, m = 1):
// g(x) = sum_edges (x_a - x_b)^2 + sum_i exp(x_i). Hessian problem.
ProblemSpec grid_energy(int p);

// Banded residual f_i = (3 - 2 x_i) x_i + 1 - sum_{0 < |j-i| <= bandwidth} x_j.
ProblemSpec banded_residual(int n, int bandwidth);

// CLI dispatch: matvec | chain | grid | banded. size is n (grid: p).
// matvec uses a fixed seed, banded a fixed bandwidth of 1.
ProblemSpec problem_by_name(const std::string& name, int size);

}  // namespace sparsead
