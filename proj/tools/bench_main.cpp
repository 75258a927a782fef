#include <exception>
#include <iostream>

#include "CLI11.hpp"
#include "sparsead/bench.hpp"

int main(int argc, char** argv) {
  sparsead::RunConfig cfg;

  CLI::App app{"sparse Jacobian/Hessian benchmark"};
  app.add_option("--problem", cfg.problem, "matvec | chain | grid | banded")
      ->required();
  app.add_option("--size", cfg.size, "problem size (grid: edge length)")
      ->required();
  app.add_option("--method", cfg.method,
                 "forward-compressed | reverse-compressed | subgraph")
      ->required();
  app.add_option("--coloring", cfg.coloring, "greedy | none (default greedy)");
  app.add_flag("--optimize", cfg.optimize, "prune the tape first");
  app.add_flag("--setup", cfg.setup, "include setup work in the timed region");
  app.add_flag("--onepass", cfg.onepass, "batch all seed directions into one sweep");
  app.add_option("--repeat", cfg.repeat, "timing repeats (default 1)");
  app.add_option("--out", cfg.out, "csv file to append to (default bench.csv)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    sparsead::RunResult rr = sparsead::run(cfg);
    std::cout << rr.csv_row << "\n";
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
