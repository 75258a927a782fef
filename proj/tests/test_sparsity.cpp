#include <cmath>
#include <random>
#include <vector>

#include "doctest.h"
#include "sparsead/recorder.hpp"
#include "sparsead/sparsity.hpp"
#include "support/oracles.hpp"

using namespace sparsead;
using testsupport::build_corpus;
using testsupport::fd_hessian;
using testsupport::fd_jacobian;
using testsupport::reach_jacobian;

namespace {

Graph worked_example() {
  return record(3, [](std::vector<Var>& x) {
    Var s = x[0] + x[1];
    return std::vector<Var>{s, s * x[2]};
  });
}

Pattern restrict_rows_cols(const Pattern& p, const IndexSet& keep_rows,
                           const IndexSet& keep_cols) {
  Pattern out(p.nrows(), p.ncols());
  for (int i : keep_rows) {
    std::vector<int> row;
    for (int j : p.row(i))
      if (keep_cols.contains(j)) row.push_back(j);
    out.row(i) = IndexSet(std::move(row));
  }
  return out;
}

}  // namespace

TEST_CASE("index sets sort, dedup and merge") {
  IndexSet s{4, 1, 4, 2};
  CHECK(s.indices() == std::vector<int>{1, 2, 4});
  CHECK(s.size() == 3);
  CHECK(s.contains(2));
  CHECK_FALSE(s.contains(3));
  s.insert(3);
  s.insert(3);
  CHECK(s.indices() == std::vector<int>{1, 2, 3, 4});
  s.union_with(IndexSet{0, 2, 9});
  CHECK(s.indices() == std::vector<int>{0, 1, 2, 3, 4, 9});
  CHECK(IndexSet::full(3) == IndexSet{0, 1, 2});
  CHECK(IndexSet{}.empty());
}

TEST_CASE("pattern container basics") {
  Pattern p(2, 3);
  p.row(0) = IndexSet{0, 1};
  p.row(1) = IndexSet{0, 1, 2};
  CHECK(p.nnz() == 5);
  CHECK(p.contains(1, 2));
  CHECK_FALSE(p.contains(0, 2));
  CHECK(p.to_text() == "row 1: 1 2\nrow 2: 1 2 3\n");

  Pattern t = p.transposed();
  CHECK(t.nrows() == 3);
  CHECK(t.ncols() == 2);
  CHECK(t.row(0) == IndexSet{0, 1});
  CHECK(t.row(2) == IndexSet{1});
  CHECK(t.transposed() == p);

  Pattern s(2, 2);
  s.row(0) = IndexSet{0, 1};
  s.row(1) = IndexSet{0};
  CHECK(s.symmetric());
  s.row(1) = IndexSet{1};
  CHECK_FALSE(s.symmetric());
  CHECK_FALSE(p.symmetric());

  Pattern u = s.upper_triangle();
  CHECK(u.row(0) == IndexSet{0, 1});
  CHECK(u.row(1) == IndexSet{1});
}

TEST_CASE("activity flags select the active cone") {
  Graph g = worked_example();
  int ignore = g.num_dependent() + 1;

  ActivitySeq full = init_activity(g, IndexSet::full(3), IndexSet::full(2));
  CHECK(full.c == std::vector<std::int32_t>(7, 0));
  CHECK(full.d == std::vector<std::uint8_t>(7, 1));

  // Only x3 selected: the add chain feeding y1 is inactive, and only y1's
  // cone is flagged demanded when only y1 is selected.
  ActivitySeq a = init_activity(g, IndexSet{2}, IndexSet{0});
  CHECK(a.c ==
        std::vector<std::int32_t>{ignore, ignore, 0, ignore, 0, ignore, 0});
  CHECK(a.d == std::vector<std::uint8_t>{1, 1, 0, 1, 0, 1, 0});
}

TEST_CASE("forward jacobian pattern equals the reachability closure") {
  auto corpus = build_corpus(120, 31001u);
  for (const auto& item : corpus) {
    Pattern oracle = reach_jacobian(item.g);
    Pattern fwd =
        forward_jacobian_sparsity(item.g, IndexSet::full(item.g.num_independent()));
    CHECK(fwd == oracle);
  }
}

TEST_CASE("reverse jacobian pattern is the transposed forward pattern") {
  auto corpus = build_corpus(120, 31002u);
  for (const auto& item : corpus) {
    Pattern fwd =
        forward_jacobian_sparsity(item.g, IndexSet::full(item.g.num_independent()));
    Pattern rev =
        reverse_jacobian_sparsity(item.g, IndexSet::full(item.g.num_dependent()));
    CHECK(rev.nrows() == item.g.num_independent());
    CHECK(rev.ncols() == item.g.num_dependent());
    CHECK(rev.transposed() == fwd);
  }
}

TEST_CASE("restricted selections zero out unselected rows and columns") {
  auto corpus = build_corpus(40, 31003u);
  std::mt19937_64 rng(5);
  for (const auto& item : corpus) {
    int n = item.g.num_independent();
    int m = item.g.num_dependent();
    std::vector<int> js, is;
    for (int j = 0; j < n; ++j)
      if (rng() & 1) js.push_back(j);
    for (int i = 0; i < m; ++i)
      if (rng() & 1) is.push_back(i);
    if (js.empty()) js.push_back(static_cast<int>(rng() % n));
    if (is.empty()) is.push_back(static_cast<int>(rng() % m));
    IndexSet J(js), I(is);

    Pattern oracle = restrict_rows_cols(reach_jacobian(item.g),
                                        IndexSet::full(m), J);
    Pattern fwd = forward_jacobian_sparsity(item.g, J);
    CHECK(fwd == oracle);

    Pattern rev_oracle =
        restrict_rows_cols(reach_jacobian(item.g).transposed(),
                           IndexSet::full(n), I);
    Pattern rev = reverse_jacobian_sparsity(item.g, I);
    CHECK(rev == rev_oracle);
  }
}

TEST_CASE("dense and sorted-vector row sets agree") {
  auto corpus = build_corpus(60, 31004u);
  for (const auto& item : corpus) {
    IndexSet J = IndexSet::full(item.g.num_independent());
    IndexSet I = IndexSet::full(item.g.num_dependent());
    CHECK(forward_jacobian_sparsity(item.g, J, 0) ==
          forward_jacobian_sparsity(item.g, J, 1 << 20));
    CHECK(reverse_jacobian_sparsity(item.g, I, 0) ==
          reverse_jacobian_sparsity(item.g, I, 1 << 20));
    CHECK(forward_hessian_sparsity(item.g, J, I, 0) ==
          forward_hessian_sparsity(item.g, J, I, 1 << 20));
    CHECK(reverse_hessian_sparsity(item.g, J, I, 0) ==
          reverse_hessian_sparsity(item.g, J, I, 1 << 20));
  }
}

TEST_CASE("hessian pattern on hand-built tapes") {
  // y = x3 (x1 + x2): cross terms (1,3) and (2,3) only.
  Graph g = worked_example();
  Pattern h = forward_hessian_sparsity(g, IndexSet::full(3), IndexSet{1});
  CHECK(h.nrows() == 3);
  CHECK(h.row(0) == IndexSet{2});
  CHECK(h.row(1) == IndexSet{2});
  CHECK(h.row(2) == IndexSet{0, 1});
  CHECK(h.symmetric());

  // Selecting only the linear dependent y1 = x1 + x2 leaves nothing.
  Pattern h0 = forward_hessian_sparsity(g, IndexSet::full(3), IndexSet{0});
  CHECK(h0.nnz() == 0);

  // Unary curvature lands on the diagonal.
  Graph gs = record(2, [](std::vector<Var>& x) {
    return std::vector<Var>{sin(x[0]) + 2.0 * x[1]};
  });
  Pattern hs = forward_hessian_sparsity(gs, IndexSet::full(2), IndexSet{0});
  CHECK(hs.row(0) == IndexSet{0});
  CHECK(hs.row(1).empty());

  // Restriction to J applies on both sides.
  Pattern hr = forward_hessian_sparsity(g, IndexSet{0, 2}, IndexSet{1});
  CHECK(hr.row(0) == IndexSet{2});
  CHECK(hr.row(1).empty());
  CHECK(hr.row(2) == IndexSet{0});
}

TEST_CASE("forward and reverse hessian patterns agree everywhere") {
  auto corpus = build_corpus(120, 31005u);
  std::mt19937_64 rng(17);
  for (const auto& item : corpus) {
    int n = item.g.num_independent();
    int m = item.g.num_dependent();
    IndexSet J = IndexSet::full(n);
    IndexSet supp = IndexSet::full(m);
    Pattern hf = forward_hessian_sparsity(item.g, J, supp);
    Pattern hr = reverse_hessian_sparsity(item.g, J, supp);
    CHECK(hf == hr);
    CHECK(hf.symmetric());

    std::vector<int> js, is;
    for (int j = 0; j < n; ++j)
      if (rng() & 1) js.push_back(j);
    for (int i = 0; i < m; ++i)
      if (rng() & 1) is.push_back(i);
    if (js.empty()) js.push_back(0);
    if (is.empty()) is.push_back(0);
    IndexSet Jr(js), suppr(is);
    Pattern hfr = forward_hessian_sparsity(item.g, Jr, suppr);
    Pattern hrr = reverse_hessian_sparsity(item.g, Jr, suppr);
    CHECK(hfr == hrr);
    CHECK(hfr.symmetric());
    // Restricting weights or independents can only remove entries.
    for (int j = 0; j < n; ++j)
      for (int k : hfr.row(j)) CHECK(hf.contains(j, k));
  }
}

TEST_CASE("finite-difference nonzeros are contained in the patterns") {
  auto corpus = build_corpus(25, 31006u);
  for (const auto& item : corpus) {
    int n = item.g.num_independent();
    Pattern jp = forward_jacobian_sparsity(item.g, IndexSet::full(n));
    Mat jfd = fd_jacobian(item.g, item.x);
    for (int i = 0; i < jfd.rows; ++i)
      for (int j = 0; j < jfd.cols; ++j)
        if (std::abs(jfd(i, j)) > 1e-6) CHECK(jp.contains(i, j));

    Pattern hp = forward_hessian_sparsity(
        item.g, IndexSet::full(n), IndexSet::full(item.g.num_dependent()));
    Mat hfd = fd_hessian(item.g, item.w, item.x);
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        if (std::abs(hfd(j, k)) > 1e-6) CHECK(hp.contains(j, k));
  }
}
