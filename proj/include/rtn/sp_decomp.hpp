#pragma once

#include <utility>
#include <variant>
#include <vector>

#include "rtn/flow.hpp"
#include "rtn/measure_expr.hpp"

namespace rtn {

/// Decomposition tree of a two-terminal series-parallel multigraph.
struct SPTree {
  enum class Kind { Leaf, Series, Parallel };

  Kind kind = Kind::Leaf;
  int source = 0;
  int sink = 0;
  int edge = -1;  // Leaf: index into the input edge list
  int join = -1;  // Series: vertex shared by the two parts
  std::vector<SPTree> parts;  // Series/Parallel: exactly two

  static SPTree leaf(int edge, int source, int sink);
  static SPTree series(SPTree first, SPTree second);
  static SPTree parallel(SPTree a, SPTree b);

  int leaf_count() const;
};

/// What is left after exhaustive series/parallel reduction.
struct NotSeriesParallel {
  std::vector<int> kernel_nodes;
  std::vector<std::pair<int, int>> kernel_edges;
};

using Decomposition = std::variant<SPTree, NotSeriesParallel>;

/// Repeatedly merges parallel edges and contracts non-terminal vertices with
/// in- and out-degree 1. Succeeds iff a single source->sink edge remains.
Decomposition decompose(const OrderDAG& dag);

/// Leaf -> delta_1, Series(a, b) -> mu_a boxtimes MP boxtimes mu_b,
/// Parallel(a, b) -> mu_a x mu_b; returned in canonical form.
MeasureExpr measure_expr(const SPTree& tree);

/// Two-terminal multigraph built from the tree's composition rules alone
/// (fresh node ids: 0 = source, 1 = sink).
struct TwoTerminalGraph {
  int node_count = 2;
  std::vector<std::pair<int, int>> edges;
  int source = 0;
  int sink = 1;
};

TwoTerminalGraph realize(const SPTree& tree);

}  // namespace rtn
