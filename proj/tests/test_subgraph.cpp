#include <random>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "sparsead/sparsity.hpp"
#include "sparsead/subgraph.hpp"
#include "support/oracles.hpp"

using namespace sparsead;
using testsupport::build_corpus;
using testsupport::node_reach;
using testsupport::reach_has;
using testsupport::trace_sorted_subgraph;

namespace {

// y1 = x1 + x2, y2 = x3 (x1 + x2), with the dependents sitting directly on
// the computing nodes (no copy tail).
Graph plain_example() {
  return deserialize(
      "graph 3 2 5\n"
      "node 4 add 1 2\n"
      "node 5 mul 3 4\n");
}

MarkVector fresh_marks(const Graph& g) {
  return MarkVector(init_activity(g, IndexSet::full(g.num_independent()),
                                  IndexSet::full(g.num_dependent())));
}

}  // namespace

TEST_CASE("dependency-ordered extraction of the worked example") {
  Graph g = plain_example();
  MarkVector marks = fresh_marks(g);
  SubgraphStats st;

  SortedSubgraph g2 = sorted_subgraph(g, 1, marks, &st);
  CHECK(g2.to_text() == "G 2: 3 2 1 4 5");
  CHECK(g2.nodes == std::vector<std::int32_t>{2, 1, 0, 3, 4});
  CHECK(st.subgraph_nodes == 5);

  // Marks persist: the second dependent re-walks shared nodes under its own
  // mark values instead of resetting anything.
  SortedSubgraph g1 = sorted_subgraph(g, 0, marks, &st);
  CHECK(g1.to_text() == "G 1: 2 1 4");
  CHECK(st.subgraph_nodes == 8);

  SubgraphWork work = subgraph_work(st, g);
  CHECK(work.total_nodes == 8);
  CHECK(work.ell == 5);

  CHECK_THROWS_WITH_AS(
      sorted_subgraph(g, 1, marks),
      "sorted_subgraph: dependent 2 already extracted with this mark vector",
      std::invalid_argument);
}

TEST_CASE("argument validation") {
  Graph g = plain_example();
  MarkVector short_marks;
  short_marks.c.assign(3, 0);
  CHECK_THROWS_WITH_AS(sorted_subgraph(g, 0, short_marks),
                       "subgraph: mark vector length mismatch",
                       std::invalid_argument);
  MarkVector marks = fresh_marks(g);
  CHECK_THROWS_WITH_AS(sorted_subgraph(g, 2, marks),
                       "subgraph: dependent index out of range",
                       std::invalid_argument);
  CHECK_THROWS_WITH_AS(subgraph_sparsity(g, IndexSet{5}, marks),
                       "subgraph: dependent index out of range",
                       std::invalid_argument);
}

TEST_CASE("corrupt marks are detected instead of spinning") {
  Graph g = plain_example();
  MarkVector marks = fresh_marks(g);
  marks.c[3] = 2;   // visited for dependent 2, but never stacked
  marks.c[2] = -2;  // done for dependent 2
  CHECK_THROWS_WITH_AS(sorted_subgraph(g, 1, marks),
                       "sorted_subgraph: no progress (corrupt marks)",
                       std::logic_error);
}

TEST_CASE("per-dependent sparsity sweep matches the forward pattern") {
  Graph g = plain_example();
  MarkVector marks = fresh_marks(g);
  SubgraphStats st;
  Pattern p = subgraph_sparsity(g, IndexSet::full(2), marks, &st);
  CHECK(p.row(0) == IndexSet{0, 1});
  CHECK(p.row(1) == IndexSet{0, 1, 2});
  CHECK(st.popped == 3);
  CHECK(st.subgraph_nodes == 0);

  auto corpus = build_corpus(80, 41001u);
  for (const auto& item : corpus) {
    MarkVector mv = fresh_marks(item.g);
    Pattern sp =
        subgraph_sparsity(item.g, IndexSet::full(item.g.num_dependent()), mv);
    CHECK(sp == forward_jacobian_sparsity(
                    item.g, IndexSet::full(item.g.num_independent())));
  }
}

TEST_CASE("extraction order is topological with bounded re-examination") {
  auto corpus = build_corpus(60, 41002u);
  for (const auto& item : corpus) {
    const Graph& g = item.g;
    if (g.num_nodes() > 60) continue;
    auto reach = node_reach(g);
    MarkVector marks = fresh_marks(g);
    std::vector<int> trace_marks(marks.c.begin(), marks.c.end());

    for (int i = 0; i < g.num_dependent(); ++i) {
      SubgraphStats st;
      SortedSubgraph sub = sorted_subgraph(g, i, marks, &st);

      testsupport::TraceResult tr = trace_sorted_subgraph(g, i, trace_marks);
      CHECK(std::vector<std::int32_t>(tr.nodes.begin(), tr.nodes.end()) ==
            sub.nodes);
      std::int64_t exam_total = 0;
      for (int k = 0; k < g.num_nodes(); ++k) {
        CHECK(tr.exams[k] <= 2);
        exam_total += tr.exams[k];
      }
      CHECK(st.top_examinations == exam_total);
      CHECK(st.top_examinations <= 2 * static_cast<std::int64_t>(sub.nodes.size()));

      // The dependent's own node comes last; nothing may precede one of its
      // transitive consumers.
      CHECK(sub.nodes.back() == g.dep_node(i));
      for (std::size_t s = 0; s < sub.nodes.size(); ++s)
        for (std::size_t t = s + 1; t < sub.nodes.size(); ++t)
          CHECK_FALSE(reach_has(reach, sub.nodes[s], sub.nodes[t]));
    }
  }
}

TEST_CASE("restricted selections ignore inactive cones") {
  auto corpus = build_corpus(40, 41003u);
  std::mt19937_64 rng(23);
  for (const auto& item : corpus) {
    const Graph& g = item.g;
    int n = g.num_independent();
    int m = g.num_dependent();
    std::vector<int> js;
    for (int j = 0; j < n; ++j)
      if (rng() & 1) js.push_back(j);
    if (js.empty()) js.push_back(static_cast<int>(rng() % n));
    IndexSet J(js);
    IndexSet I = IndexSet::full(m);

    ActivitySeq act = init_activity(g, J, I);
    MarkVector marks(act);
    Pattern sp = subgraph_sparsity(g, I, marks, nullptr);
    CHECK(sp == forward_jacobian_sparsity(g, J));

    MarkVector marks2(act);
    for (int i = 0; i < m; ++i) {
      if (act.c[g.dep_node(i)] != 0) continue;  // dependent itself inactive
      SortedSubgraph sub = sorted_subgraph(g, i, marks2);
      for (int k : sub.nodes) {
        CHECK(act.c[k] == 0);
        if (k < n) CHECK(J.contains(k));
      }
    }
  }
}
