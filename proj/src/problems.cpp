#include "sparsead/problems.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

#include "sparsead/recorder.hpp"

namespace sparsead {

namespace {

// Explicit mapping keeps the draw identical across standard libraries
// (distributions are not pinned down the way the engine is).
double uniform_pm1(std::mt19937_64& rng) {
  double u01 = static_cast<double>(rng() >> 11) * 0x1.0p-53;
  return 2.0 * u01 - 1.0;
}

void check_size(int n, const char* what) {
  if (n < 1) throw std::invalid_argument(std::string(what) + ": size must be >= 1");
}

}  // namespace

ProblemSpec matvec(int n, std::uint64_t seed) {
  check_size(n, "matvec");
  std::mt19937_64 rng(seed);
  std::vector<double> a(static_cast<std::size_t>(n) * n);
  for (double& e : a) e = uniform_pm1(rng);

  Recorder rec(n);
  std::vector<Var> x = rec.independents();
  std::vector<Var> y;
  y.reserve(n);
  for (int i = 0; i < n; ++i) {
    Var acc = a[static_cast<std::size_t>(i) * n] * x[0];
    for (int j = 1; j < n; ++j) {
      acc = acc + a[static_cast<std::size_t>(i) * n + j] * x[j];
    }
    y.push_back(acc);
  }

  Pattern ref(n, n);
  for (int i = 0; i < n; ++i) ref.row(i) = IndexSet::full(n);

  std::vector<double> x0(n);
  for (int j = 0; j < n; ++j) x0[j] = std::cos(j + 1.0);

  return ProblemSpec{"matvec", n, n, false, rec.finish(y), std::move(ref),
                     std::move(x0), std::vector<double>(n, 1.0)};
}

ProblemSpec chain(int n) {
  check_size(n, "chain");
  Recorder rec(n);
  std::vector<Var> x = rec.independents();
  Var v = x[n - 1];
  for (int k = 0; k < n; ++k) v = sin(v);
  std::vector<Var> y;
  y.reserve(n);
  for (int k = 0; k < n; ++k) y.push_back(v + x[k]);

  Pattern ref(n, n);
  for (int k = 0; k < n; ++k) {
    ref.row(k) = k < n - 1 ? IndexSet{k, n - 1} : IndexSet{n - 1};
  }

  std::vector<double> x0(n);
  for (int k = 0; k < n; ++k) x0[k] = 0.5 * std::cos(k + 1.0);

  return ProblemSpec{"chain", n, n, false, rec.finish(y), std::move(ref),
                     std::move(x0), std::vector<double>(n, 1.0)};
}

ProblemSpec grid_energy(int p) {
  check_size(p, "grid");
  int n = p * p;
  auto vertex = [p](int r, int c) { return r * p + c; };

  Recorder rec(n);
  std::vector<Var> x = rec.independents();
  Var acc = exp(x[0]);
  for (int i = 1; i < n; ++i) acc = acc + exp(x[i]);
  for (int r = 0; r < p; ++r) {
    for (int c = 0; c < p; ++c) {
      if (c + 1 < p) {
        Var d = x[vertex(r, c)] - x[vertex(r, c + 1)];
        acc = acc + d * d;
      }
      if (r + 1 < p) {
        Var d = x[vertex(r, c)] - x[vertex(r + 1, c)];
        acc = acc + d * d;
      }
    }
  }

  Pattern ref(n, n);
  for (int r = 0; r < p; ++r) {
    for (int c = 0; c < p; ++c) {
      int v = vertex(r, c);
      ref.row(v).insert(v);
      if (c + 1 < p) ref.row(v).insert(vertex(r, c + 1));
      if (r + 1 < p) ref.row(v).insert(vertex(r + 1, c));
    }
  }

  std::vector<double> x0(n);
  for (int i = 0; i < n; ++i) x0[i] = 0.1 * std::sin(i + 1.0);

  return ProblemSpec{"grid",       n,
                     1,            true,
                     rec.finish({acc}), std::move(ref),
                     std::move(x0), std::vector<double>{1.0}};
}

ProblemSpec banded_residual(int n, int bandwidth) {
  check_size(n, "banded");
  if (bandwidth < 0) throw std::invalid_argument("banded: bandwidth must be >= 0");

  Recorder rec(n);
  std::vector<Var> x = rec.independents();
  std::vector<Var> y;
  y.reserve(n);
  for (int i = 0; i < n; ++i) {
    Var acc = (3.0 - 2.0 * x[i]) * x[i] + 1.0;
    for (int j = std::max(0, i - bandwidth); j <= std::min(n - 1, i + bandwidth); ++j) {
      if (j != i) acc = acc - x[j];
    }
    y.push_back(acc);
  }

  Pattern ref(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = std::max(0, i - bandwidth); j <= std::min(n - 1, i + bandwidth); ++j) {
      ref.row(i).insert(j);
    }
  }

  std::vector<double> x0(n);
  for (int i = 0; i < n; ++i) x0[i] = 0.5 * std::cos(i + 1.0);

  return ProblemSpec{"banded", n, n, false, rec.finish(y), std::move(ref),
                     std::move(x0), std::vector<double>(n, 1.0)};
}

ProblemSpec problem_by_name(const std::string& name, int size) {
  if (name == "matvec") return matvec(size, 12345);
  if (name == "chain") return chain(size);
  if (name == "grid") return grid_energy(size);
  if (name == "banded") return banded_residual(size, 1);
  throw std::invalid_argument("unknown problem: " + name);
}

}  // namespace sparsead
