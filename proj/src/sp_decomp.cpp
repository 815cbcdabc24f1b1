#include "rtn/sp_decomp.hpp"

#include <map>
#include <stdexcept>

namespace rtn {

SPTree SPTree::leaf(int edge, int source, int sink) {
  SPTree t;
  t.kind = Kind::Leaf;
  t.edge = edge;
  t.source = source;
  t.sink = sink;
  return t;
}

SPTree SPTree::series(SPTree first, SPTree second) {
  if (first.sink != second.source) throw std::invalid_argument("series parts do not share a vertex");
  SPTree t;
  t.kind = Kind::Series;
  t.source = first.source;
  t.sink = second.sink;
  t.join = first.sink;
  t.parts.push_back(std::move(first));
  t.parts.push_back(std::move(second));
  return t;
}

SPTree SPTree::parallel(SPTree a, SPTree b) {
  if (a.source != b.source || a.sink != b.sink)
    throw std::invalid_argument("parallel parts have different terminals");
  SPTree t;
  t.kind = Kind::Parallel;
  t.source = a.source;
  t.sink = a.sink;
  t.parts.push_back(std::move(a));
  t.parts.push_back(std::move(b));
  return t;
}

int SPTree::leaf_count() const {
  if (kind == Kind::Leaf) return 1;
  return parts[0].leaf_count() + parts[1].leaf_count();
}

namespace {

struct WorkEdge {
  int u;
  int v;
  SPTree tree;
  bool alive = true;
};

bool merge_parallel(std::vector<WorkEdge>& edges) {
  bool changed = false;
  std::map<std::pair<int, int>, std::size_t> first;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (!edges[i].alive) continue;
    auto [it, fresh] = first.emplace(std::pair(edges[i].u, edges[i].v), i);
    if (fresh) continue;
    auto& keep = edges[it->second];
    keep.tree = SPTree::parallel(std::move(keep.tree), std::move(edges[i].tree));
    edges[i].alive = false;
    changed = true;
  }
  return changed;
}

bool contract_series(std::vector<WorkEdge>& edges, int nodes, int source, int sink) {
  bool changed = false;
  for (int w = 0; w < nodes; ++w) {
    if (w == source || w == sink) continue;
    int in = -1, out = -1, nin = 0, nout = 0;
    for (std::size_t i = 0; i < edges.size(); ++i) {
      if (!edges[i].alive) continue;
      if (edges[i].v == w) in = static_cast<int>(i), ++nin;
      if (edges[i].u == w) out = static_cast<int>(i), ++nout;
    }
    if (nin != 1 || nout != 1) continue;
    auto& a = edges[in];
    auto& b = edges[out];
    a.tree = SPTree::series(std::move(a.tree), std::move(b.tree));
    a.v = b.v;
    b.alive = false;
    changed = true;
  }
  return changed;
}

}  // namespace

Decomposition decompose(const OrderDAG& dag) {
  std::vector<WorkEdge> edges;
  for (std::size_t i = 0; i < dag.edges.size(); ++i) {
    auto [u, v] = dag.edges[i];
    edges.push_back({u, v, SPTree::leaf(static_cast<int>(i), u, v)});
  }
  for (;;) {
    bool changed = merge_parallel(edges);
    changed = contract_series(edges, dag.node_count(), dag.source, dag.sink) || changed;
    if (!changed) break;
  }

  std::vector<const WorkEdge*> alive;
  for (const auto& e : edges)
    if (e.alive) alive.push_back(&e);
  if (alive.size() == 1 && alive[0]->u == dag.source && alive[0]->v == dag.sink)
    return alive[0]->tree;

  NotSeriesParallel kernel;
  std::vector<char> used(dag.node_count(), 0);
  used[dag.source] = used[dag.sink] = 1;
  for (const auto* e : alive) {
    kernel.kernel_edges.emplace_back(e->u, e->v);
    used[e->u] = used[e->v] = 1;
  }
  for (int v = 0; v < dag.node_count(); ++v)
    if (used[v]) kernel.kernel_nodes.push_back(v);
  return kernel;
}

namespace {

MeasureExpr raw_measure(const SPTree& t) {
  switch (t.kind) {
    case SPTree::Kind::Leaf: return MeasureExpr::one();
    case SPTree::Kind::Series:
      return MeasureExpr::free_conv({raw_measure(t.parts[0]), MeasureExpr::mp(), raw_measure(t.parts[1])});
    case SPTree::Kind::Parallel:
      return MeasureExpr::class_conv({raw_measure(t.parts[0]), raw_measure(t.parts[1])});
  }
  return MeasureExpr::one();
}

void build(const SPTree& t, int s, int sink, TwoTerminalGraph& g) {
  switch (t.kind) {
    case SPTree::Kind::Leaf:
      g.edges.emplace_back(s, sink);
      return;
    case SPTree::Kind::Series: {
      const int mid = g.node_count++;
      build(t.parts[0], s, mid, g);
      build(t.parts[1], mid, sink, g);
      return;
    }
    case SPTree::Kind::Parallel:
      build(t.parts[0], s, sink, g);
      build(t.parts[1], s, sink, g);
      return;
  }
}

}  // namespace

MeasureExpr measure_expr(const SPTree& tree) { return raw_measure(tree).canonical(); }

TwoTerminalGraph realize(const SPTree& tree) {
  TwoTerminalGraph g;
  build(tree, g.source, g.sink, g);
  return g;
}

}  // namespace rtn
