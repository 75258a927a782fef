#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "sparsead/op_kind.hpp"

namespace sparsead {

// Immutable operation tape. Nodes are numbered 0..ell-1: the first n nodes
// are the independent variables, the last m nodes are the dependents, and
// every operand index is smaller than the node using it, so one forward walk
// evaluates the whole tape. Unary nodes repeat their operand in both slots;
// Const nodes carry -1 in both slots. All external text surfaces (the
// serialized form, error messages) use 1-based node numbers.
class Graph {
 public:
  struct Node {
    OpTag tag = OpTag::Copy;
    std::int32_t a = -1;
    std::int32_t b = -1;
    double c = 0.0;

    bool operator==(const Node&) const = default;
  };

  // Validates the tape invariants and throws std::invalid_argument on any
  // violation (bad counts, operand out of range, unary slots that differ,
  // constant on a tag that takes none, ...).
  Graph(int num_independent, int num_dependent, std::vector<Node> ops);

  int num_independent() const { return n_; }
  int num_dependent() const { return m_; }
  int num_nodes() const { return n_ + static_cast<int>(ops_.size()); }
  int num_interior() const { return static_cast<int>(ops_.size()); }

  bool is_independent(int k) const { return k < n_; }
  const Node& node(int k) const { return ops_[k - n_]; }

  // Node id of dependent i (0-based), i.e. ell - m + i.
  int dep_node(int i) const { return num_nodes() - m_ + i; }

  bool operator==(const Graph&) const = default;

 private:
  int n_ = 0;
  int m_ = 0;
  std::vector<Node> ops_;
};

struct EvalResult {
  std::vector<double> y;  // dependent values, length m
  std::vector<double> v;  // all node values, length ell
};

// Zero-order sweep. Throws std::invalid_argument on a bad x and
// std::domain_error on a domain violation or non-finite intermediate,
// naming the offending node.
EvalResult eval_zero(const Graph& g, const std::vector<double>& x);

// Dead-node elimination: drops interior nodes no dependent consumes
// (directly or transitively). Independents and dependents are always kept
// and keep their relative order, so eval_zero is preserved exactly.
Graph prune(const Graph& g);

// Text form:
//   graph <n> <m> <ell>
//   node <k> <tag> <a> <b> [<const>]     for k = n+1 .. ell, in order
// with 1-based indices, lower-case tag names, and shortest round-trip
// formatting for constants. Const nodes print 0 for both operand slots.
std::string serialize(const Graph& g);

// Strict parser for the text form; errors name the offending line.
Graph deserialize(std::string_view text);

}  // namespace sparsead
