#include "sparsead/bench.hpp"

#include <charconv>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <limits>
#include <stdexcept>

#include "sparsead/drivers.hpp"
#include "sparsead/problems.hpp"

namespace sparsead {

namespace {

constexpr const char* kHeader =
    "implement,problem,coloring,optimize,setup,reverse,onepass,n,m,nnz,visits,sec";

Method parse_method(const std::string& s) {
  if (s == "forward-compressed") return Method::ForwardCompressed;
  if (s == "reverse-compressed") return Method::ReverseCompressed;
  if (s == "subgraph") return Method::Subgraph;
  throw std::invalid_argument("unknown method: " + s);
}

MethodConfig to_method_config(const RunConfig& cfg) {
  MethodConfig mc;
  mc.method = parse_method(cfg.method);
  mc.onepass = cfg.onepass;
  mc.optimize = cfg.optimize;
  mc.setup_cached = !cfg.setup;
  mc.use_coloring = cfg.coloring == "greedy";
  return mc;
}

std::string fmt_double(double x) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

const char* bool_token(bool b) { return b ? "true" : "false"; }

SparseMatrixValues drive(const ProblemSpec& ps, const MethodConfig& mc,
                         DriverStats* st) {
  if (ps.hessian) return sparse_hessian(ps.graph, ps.x0, ps.w0, mc, st);
  return sparse_jacobian(ps.graph, ps.x0, mc, st);
}

void append_row(const std::string& path, const std::string& row) {
  namespace fs = std::filesystem;
  bool need_header = !fs::exists(path) || fs::file_size(path) == 0;
  std::ofstream out(path, std::ios::app);
  if (!out) throw std::runtime_error("cannot open csv file: " + path);
  if (need_header) out << kHeader << '\n';
  out << row << '\n';
  if (!out) throw std::runtime_error("cannot write csv file: " + path);
}

}  // namespace

void validate(const RunConfig& cfg) {
  if (cfg.problem != "matvec" && cfg.problem != "chain" &&
      cfg.problem != "grid" && cfg.problem != "banded") {
    throw std::invalid_argument("unknown problem: " + cfg.problem);
  }
  parse_method(cfg.method);
  if (cfg.coloring != "greedy" && cfg.coloring != "none") {
    throw std::invalid_argument("unknown coloring: " + cfg.coloring);
  }
  if (cfg.size < 1) throw std::invalid_argument("size must be >= 1");
  if (cfg.repeat < 1) throw std::invalid_argument("repeat must be >= 1");
  if (cfg.method == "subgraph") {
    if (cfg.onepass) {
      throw std::invalid_argument(
          "onepass must be false when the method is subgraph");
    }
    if (cfg.coloring != "none") {
      throw std::invalid_argument(
          "coloring must be none when the method is subgraph");
    }
  }
}

RunResult run(const RunConfig& cfg) {
  validate(cfg);
  MethodConfig mc = to_method_config(cfg);
  using clock = std::chrono::steady_clock;

  RunResult rr;
  double best = std::numeric_limits<double>::infinity();
  DriverStats st;
  SparseMatrixValues last;

  if (cfg.setup) {
    for (int rep = 0; rep < cfg.repeat; ++rep) {
      auto t0 = clock::now();
      ProblemSpec ps = problem_by_name(cfg.problem, cfg.size);
      last = drive(ps, mc, &st);
      auto t1 = clock::now();
      best = std::min(best, std::chrono::duration<double>(t1 - t0).count());
      rr.n = ps.n;
      rr.m = ps.m;
    }
  } else {
    ProblemSpec ps = problem_by_name(cfg.problem, cfg.size);
    rr.n = ps.n;
    rr.m = ps.m;
    Prepared prep(ps.graph, mc);
    if (ps.hessian) prep.hessian(ps.x0, ps.w0);  // warm the per-weight cache
    for (int rep = 0; rep < cfg.repeat; ++rep) {
      auto t0 = clock::now();
      last = ps.hessian ? prep.hessian(ps.x0, ps.w0, &st)
                        : prep.jacobian(ps.x0, &st);
      auto t1 = clock::now();
      best = std::min(best, std::chrono::duration<double>(t1 - t0).count());
    }
  }

  rr.nnz = last.pattern.nnz();
  rr.visits = st.visits;
  rr.sec = best;

  bool reverse = mc.method != Method::ForwardCompressed;
  rr.csv_row = cfg.method + "," + cfg.problem + "," + cfg.coloring + "," +
               bool_token(cfg.optimize) + "," + bool_token(cfg.setup) + "," +
               bool_token(reverse) + "," + bool_token(cfg.onepass) + "," +
               std::to_string(rr.n) + "," + std::to_string(rr.m) + "," +
               std::to_string(rr.nnz) + "," + std::to_string(rr.visits) + "," +
               fmt_double(rr.sec);
  append_row(cfg.out, rr.csv_row);
  return rr;
}

std::vector<ScalingRow> scaling_report(const std::string& problem,
                                       const std::vector<int>& sizes,
                                       const std::string& method) {
  Method mth = parse_method(method);
  using clock = std::chrono::steady_clock;
  std::vector<ScalingRow> rows;
  rows.reserve(sizes.size());
  for (int size : sizes) {
    ProblemSpec ps = problem_by_name(problem, size);
    MethodConfig mc;
    mc.method = mth;
    mc.use_coloring = mth != Method::Subgraph;
    Prepared prep(ps.graph, mc);
    if (ps.hessian) prep.hessian(ps.x0, ps.w0);
    double best = std::numeric_limits<double>::infinity();
    DriverStats st;
    for (int rep = 0; rep < 3; ++rep) {
      auto t0 = clock::now();
      if (ps.hessian) {
        prep.hessian(ps.x0, ps.w0, &st);
      } else {
        prep.jacobian(ps.x0, &st);
      }
      auto t1 = clock::now();
      best = std::min(best, std::chrono::duration<double>(t1 - t0).count());
    }
    rows.push_back(ScalingRow{size, ps.n, st.visits, best});
  }
  return rows;
}

}  // namespace sparsead
