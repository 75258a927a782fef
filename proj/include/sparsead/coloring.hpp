#pragma once

#include <vector>

#include "sparsead/mat.hpp"
#include "sparsead/pattern.hpp"

namespace sparsead {

struct Coloring {
  std::vector<int> color;  // 0-based color per column (or row)
  int num_colors = 0;
};

// One color per index; used when compression is switched off.
Coloring identity_coloring(int count);

// Greedy distance-2 coloring of the columns of p: columns sharing a row get
// distinct colors. Natural order, smallest feasible color.
Coloring color_columns_distance2(const Pattern& p);

// Same applied to the rows of p.
Coloring color_rows_distance2(const Pattern& p);

// Greedy star coloring of a structurally symmetric pattern: a proper
// coloring in which every path on four vertices uses at least three colors.
// Natural order; a candidate color is rejected whenever it would complete a
// two-colored four-vertex path through the vertex.
Coloring color_star(const Pattern& p);

// Validity checkers, independent of the greedy construction above.
bool check_distance2_columns(const Pattern& p, const Coloring& c);
bool check_distance2_rows(const Pattern& p, const Coloring& c);
bool check_star(const Pattern& p, const Coloring& c);

// How many greedy colorings have run in this process. Lets a test pin down
// that a code path performs none.
long greedy_coloring_count();

// Position in a compressed product where one pattern entry can be read back.
struct CellRef {
  int row = -1;
  int col = -1;
};

struct SeedPlan {
  Mat seed;  // ncols x num_colors, row j carries a single 1 in column color[j]
  std::vector<std::vector<CellRef>> where;  // parallel to the pattern rows
};

// Builds the seed matrix for a coloring of p's columns together with the
// recovery map. Entry (i, j) is read from cell (i, color[j]) of the
// compressed product when column j is the only column of row i with that
// color; with symmetric = true the mirrored cell (j, color[i]) is used as
// the fallback. Throws when neither read is unambiguous, so a bad coloring
// cannot slip through.
SeedPlan build_seed(const Pattern& p, const Coloring& c, bool symmetric);

// Reads the stored entries of p out of the compressed product b, row by row,
// parallel to the pattern rows.
std::vector<std::vector<double>> recover(const Pattern& p, const SeedPlan& plan,
                                         const Mat& b);

}  // namespace sparsead
