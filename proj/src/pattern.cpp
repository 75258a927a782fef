#include "sparsead/pattern.hpp"

namespace sparsead {

Pattern::Pattern(int nrows, int ncols) : ncols_(ncols), rows_(nrows) {}

long long Pattern::nnz() const {
  long long total = 0;
  for (const IndexSet& r : rows_) total += r.size();
  return total;
}

Pattern Pattern::transposed() const {
  Pattern t(ncols_, nrows());
  std::vector<std::vector<int>> cols(ncols_);
  for (int i = 0; i < nrows(); ++i) {
    for (int j : rows_[i]) cols[j].push_back(i);
  }
  for (int j = 0; j < ncols_; ++j) t.rows_[j] = IndexSet(std::move(cols[j]));
  return t;
}

bool Pattern::symmetric() const {
  if (nrows() != ncols_) return false;
  for (int i = 0; i < nrows(); ++i) {
    for (int j : rows_[i]) {
      if (!rows_[j].contains(i)) return false;
    }
  }
  return true;
}

Pattern Pattern::upper_triangle() const {
  Pattern u(nrows(), ncols_);
  for (int i = 0; i < nrows(); ++i) {
    std::vector<int> keep;
    for (int j : rows_[i]) {
      if (j >= i) keep.push_back(j);
    }
    u.rows_[i] = IndexSet(std::move(keep));
  }
  return u;
}

std::string Pattern::to_text() const {
  std::string out;
  for (int i = 0; i < nrows(); ++i) {
    out += "row " + std::to_string(i + 1) + ":";
    for (int j : rows_[i]) out += " " + std::to_string(j + 1);
    out += "\n";
  }
  return out;
}

}  // namespace sparsead
