#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace sparsead {

// One benchmark invocation. Methods and problems are addressed by their CLI
// tokens; validate() enforces the option matrix before anything runs.
struct RunConfig {
  std::string problem;              // matvec | chain | grid | banded
  int size = 0;
  std::string method;               // forward-compressed | reverse-compressed | subgraph
  std::string coloring = "greedy";  // greedy | none
  bool optimize = false;
  bool setup = false;               // include setup work in the timed region
  bool onepass = false;
  int repeat = 1;
  std::string out = "bench.csv";
};

// Throws std::invalid_argument naming the violated rule.
void validate(const RunConfig& cfg);

struct RunResult {
  int n = 0;
  int m = 0;
  long long nnz = 0;
  std::int64_t visits = 0;
  double sec = 0.0;
  std::string csv_row;  // the exact line appended to the file
};

// Runs the configured measurement and appends one CSV row:
//   implement,problem,coloring,optimize,setup,reverse,onepass,n,m,nnz,visits,sec
// The header is written once per file; sec is the minimum per-evaluation wall
// time over the repeats. With setup=true every repeat re-records the problem
// tape and redoes sparsity, coloring (or subgraph extraction) and pruning
// inside the timer; otherwise all of that happens once, untimed.
RunResult run(const RunConfig& cfg);

struct ScalingRow {
  int size = 0;
  int n = 0;
  std::int64_t visits = 0;
  double sec = 0.0;
};

// Visit counts and steady-state timings across sizes, for growth-rate
// checks. Uses coloring=none for the subgraph method and greedy otherwise.
std::vector<ScalingRow> scaling_report(const std::string& problem,
                                       const std::vector<int>& sizes,
                                       const std::string& method);

}  // namespace sparsead
