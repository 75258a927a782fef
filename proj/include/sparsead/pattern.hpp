#pragma once

#include <string>
#include <vector>

#include "sparsead/index_set.hpp"

namespace sparsead {

// Row-wise sparsity pattern. Row i holds the 0-based column indices of the
// structural nonzeros; the text form is 1-based.
class Pattern {
 public:
  Pattern() = default;
  Pattern(int nrows, int ncols);

  int nrows() const { return static_cast<int>(rows_.size()); }
  int ncols() const { return ncols_; }
  IndexSet& row(int i) { return rows_[i]; }
  const IndexSet& row(int i) const { return rows_[i]; }

  long long nnz() const;
  bool contains(int i, int j) const { return rows_[i].contains(j); }

  Pattern transposed() const;
  bool symmetric() const;  // requires nrows == ncols
  // Keeps entries with column >= row (diagonal included).
  Pattern upper_triangle() const;

  // One line per row: "row <i>: <j1> <j2> ...", all indices 1-based.
  std::string to_text() const;

  bool operator==(const Pattern&) const = default;

 private:
  int ncols_ = 0;
  std::vector<IndexSet> rows_;
};

}  // namespace sparsead
