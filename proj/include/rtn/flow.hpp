#pragma once

#include <utility>
#include <vector>

#include "rtn/graph.hpp"

namespace rtn {

/// Neighbour exploration order for the augmenting-path search. Canonical is
/// the default; Reversed exists only to probe whether the order graph
/// depends on the choice of maximum path set.
enum class TieBreak { Canonical, Reversed };

struct FlowResult {
  int value = 0;
  /// Source-to-sink node sequences, pairwise edge-disjoint.
  std::vector<std::vector<int>> paths;
  /// Edge ids (into FlowNetwork::edges()) traversed by each path.
  std::vector<std::vector<int>> path_edges;
  /// Per edge: +1 if flow runs u->v, -1 if v->u, 0 if unused.
  std::vector<int> edge_flow;

  std::vector<int> used_edges() const;
};

/// Unit-capacity maximum flow by breadth-first augmenting paths. Flow
/// circulations left behind by path cancellation are removed, so every used
/// edge belongs to exactly one returned path.
FlowResult max_flow(const FlowNetwork& net, TieBreak order = TieBreak::Canonical);

struct CutSet {
  std::vector<int> source_side;    // sorted node ids, contains the source
  std::vector<int> crossing_edges; // edge ids
};

/// Nodes reachable from the source in the residual network, and the edges
/// leaving that set.
CutSet min_cut(const FlowNetwork& net, const FlowResult& flow);

/// Connected components of the network after deleting the used edges.
/// Clusters are numbered by their smallest node id.
struct ClusteredGraph {
  std::vector<int> cluster_of;              // node -> cluster
  std::vector<std::vector<int>> members;    // cluster -> sorted nodes
  int source_cluster = 0;
  int sink_cluster = 0;
};

/// Throws std::logic_error if source and sink share a cluster (the flow was
/// not maximal).
ClusteredGraph residual_clusters(const FlowNetwork& net, const FlowResult& flow);

/// Two-terminal DAG on merged clusters.
struct OrderDAG {
  /// Each node is a set of clusters merged by antisymmetry.
  std::vector<std::vector<int>> nodes;
  /// Directed covering edges, one per path occurrence (sorted multiset).
  std::vector<std::pair<int, int>> edges;
  int source = 0;
  int sink = 0;

  int node_count() const { return static_cast<int>(nodes.size()); }
};

/// Builds the order graph from the path relations: consecutive path nodes
/// give cluster relations, directed cycles are contracted (strongly connected
/// components), self-loops dropped, and relations implied by transitivity
/// removed so that the edges are exactly the covering relations.
OrderDAG partial_order(const ClusteredGraph& clusters, const FlowResult& flow);

/// Checks acyclicity, terminal degrees and that every node is on a
/// source-to-sink path. Returns a list of problems (empty when valid).
std::vector<std::string> check_order_dag(const OrderDAG& dag);

/// (n-1) * maxflow(G_{A|B}); the analytic minimum of the network Hamiltonian.
int min_hamiltonian(const Graph& g, int n);

/// Human-readable labels "[id,15]" for each order-graph node.
std::vector<std::string> order_node_labels(const OrderDAG& dag, const ClusteredGraph& clusters,
                                           const FlowNetwork& net);

}  // namespace rtn
