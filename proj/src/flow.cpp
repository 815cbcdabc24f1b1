#include "rtn/flow.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <numeric>
#include <set>
#include <stdexcept>

namespace rtn {

namespace {

struct Arc {
  int to;
  int edge;
};

std::vector<std::vector<Arc>> adjacency(const FlowNetwork& net, TieBreak order) {
  std::vector<std::vector<Arc>> adj(net.node_count());
  const auto& edges = net.edges();
  for (int e = 0; e < static_cast<int>(edges.size()); ++e) {
    adj[edges[e].u].push_back({edges[e].v, e});
    adj[edges[e].v].push_back({edges[e].u, e});
  }
  for (auto& arcs : adj) {
    std::sort(arcs.begin(), arcs.end(), [&](const Arc& x, const Arc& y) {
      return order == TieBreak::Canonical ? std::pair(x.to, x.edge) < std::pair(y.to, y.edge)
                                          : std::pair(x.to, x.edge) > std::pair(y.to, y.edge);
    });
  }
  return adj;
}

// Residual capacity of edge e when traversed starting at node `from`.
bool residual(const NetEdge& e, int flow, int from) {
  return e.u == from ? flow < 1 : flow > -1;
}

// Flow leaves `node` through edge e.
bool carries_out(const NetEdge& e, int flow, int node) {
  return (e.u == node && flow == 1) || (e.v == node && flow == -1);
}

}  // namespace

std::vector<int> FlowResult::used_edges() const {
  std::vector<int> used;
  for (int e = 0; e < static_cast<int>(edge_flow.size()); ++e)
    if (edge_flow[e] != 0) used.push_back(e);
  return used;
}

FlowResult max_flow(const FlowNetwork& net, TieBreak order) {
  const auto& edges = net.edges();
  const auto adj = adjacency(net, order);
  const int n = net.node_count();
  const int s = net.source();
  const int t = net.sink();

  FlowResult result;
  result.edge_flow.assign(edges.size(), 0);
  auto& flow = result.edge_flow;

  for (;;) {
    std::vector<int> via(n, -1);
    std::vector<char> seen(n, 0);
    std::deque<int> queue{s};
    seen[s] = 1;
    while (!queue.empty() && !seen[t]) {
      int x = queue.front();
      queue.pop_front();
      for (const auto& arc : adj[x]) {
        if (seen[arc.to] || !residual(edges[arc.edge], flow[arc.edge], x)) continue;
        seen[arc.to] = 1;
        via[arc.to] = arc.edge;
        queue.push_back(arc.to);
      }
    }
    if (!seen[t]) break;
    for (int y = t; y != s;) {
      const auto& e = edges[via[y]];
      const int x = e.u == y ? e.v : e.u;
      flow[via[y]] += e.u == x ? 1 : -1;
      y = x;
    }
    ++result.value;
  }

  // Decompose into paths, cancelling any circulation met on the way.
  std::vector<char> consumed(edges.size(), 0);
  for (int k = 0; k < result.value; ++k) {
    std::vector<int> nodes{s};
    std::vector<int> used;
    std::vector<int> position(n, -1);
    position[s] = 0;
    int cur = s;
    while (cur != t) {
      int next_edge = -1;
      for (const auto& arc : adj[cur]) {
        if (!consumed[arc.edge] && carries_out(edges[arc.edge], flow[arc.edge], cur)) {
          next_edge = arc.edge;
          break;
        }
      }
      if (next_edge < 0) throw std::logic_error("flow conservation violated");
      const auto& e = edges[next_edge];
      const int next = e.u == cur ? e.v : e.u;
      if (position[next] >= 0) {
        const int p = position[next];
        for (int i = p; i < static_cast<int>(used.size()); ++i) {
          flow[used[i]] = 0;
          consumed[used[i]] = 1;
        }
        flow[next_edge] = 0;
        consumed[next_edge] = 1;
        for (int i = p + 1; i < static_cast<int>(nodes.size()); ++i) position[nodes[i]] = -1;
        nodes.resize(p + 1);
        used.resize(p);
        cur = next;
        continue;
      }
      consumed[next_edge] = 1;
      used.push_back(next_edge);
      position[next] = static_cast<int>(nodes.size());
      nodes.push_back(next);
      cur = next;
    }
    result.paths.push_back(std::move(nodes));
    result.path_edges.push_back(std::move(used));
  }
  for (std::size_t e = 0; e < edges.size(); ++e)
    if (!consumed[e]) flow[e] = 0;
  return result;
}

CutSet min_cut(const FlowNetwork& net, const FlowResult& flow) {
  const auto& edges = net.edges();
  const auto adj = adjacency(net, TieBreak::Canonical);
  std::vector<char> seen(net.node_count(), 0);
  std::deque<int> queue{net.source()};
  seen[net.source()] = 1;
  while (!queue.empty()) {
    int x = queue.front();
    queue.pop_front();
    for (const auto& arc : adj[x]) {
      if (seen[arc.to] || !residual(edges[arc.edge], flow.edge_flow[arc.edge], x)) continue;
      seen[arc.to] = 1;
      queue.push_back(arc.to);
    }
  }
  CutSet cut;
  for (int v = 0; v < net.node_count(); ++v)
    if (seen[v]) cut.source_side.push_back(v);
  for (int e = 0; e < static_cast<int>(edges.size()); ++e)
    if (seen[edges[e].u] != seen[edges[e].v]) cut.crossing_edges.push_back(e);
  return cut;
}

ClusteredGraph residual_clusters(const FlowNetwork& net, const FlowResult& flow) {
  const int n = net.node_count();
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  const auto& edges = net.edges();
  for (std::size_t e = 0; e < edges.size(); ++e)
    if (flow.edge_flow[e] == 0) parent[find(edges[e].u)] = find(edges[e].v);

  ClusteredGraph cg;
  cg.cluster_of.assign(n, -1);
  std::vector<int> id_of_root(n, -1);
  for (int v = 0; v < n; ++v) {
    int r = find(v);
    if (id_of_root[r] < 0) {
      id_of_root[r] = static_cast<int>(cg.members.size());
      cg.members.emplace_back();
    }
    cg.cluster_of[v] = id_of_root[r];
    cg.members[id_of_root[r]].push_back(v);
  }
  cg.source_cluster = cg.cluster_of[net.source()];
  cg.sink_cluster = cg.cluster_of[net.sink()];
  if (cg.source_cluster == cg.sink_cluster)
    throw std::logic_error("source and sink share a residual cluster: flow is not maximal");
  return cg;
}

namespace {

// Tarjan's strongly connected components; returns component per vertex.
std::vector<int> strong_components(int n, const std::vector<std::vector<int>>& out) {
  std::vector<int> index(n, -1), low(n, 0), comp(n, -1), stack;
  std::vector<char> on_stack(n, 0);
  int counter = 0, ncomp = 0;
  std::function<void(int)> visit = [&](int v) {
    index[v] = low[v] = counter++;
    stack.push_back(v);
    on_stack[v] = 1;
    for (int w : out[v]) {
      if (index[w] < 0) {
        visit(w);
        low[v] = std::min(low[v], low[w]);
      } else if (on_stack[w]) {
        low[v] = std::min(low[v], index[w]);
      }
    }
    if (low[v] == index[v]) {
      int w;
      do {
        w = stack.back();
        stack.pop_back();
        on_stack[w] = 0;
        comp[w] = ncomp;
      } while (w != v);
      ++ncomp;
    }
  };
  for (int v = 0; v < n; ++v)
    if (index[v] < 0) visit(v);
  return comp;
}

}  // namespace

OrderDAG partial_order(const ClusteredGraph& cg, const FlowResult& flow) {
  const int nclusters = static_cast<int>(cg.members.size());
  std::vector<std::pair<int, int>> relations;
  std::vector<char> present(nclusters, 0);
  present[cg.source_cluster] = present[cg.sink_cluster] = 1;
  for (const auto& path : flow.paths) {
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
      const int a = cg.cluster_of[path[i]];
      const int b = cg.cluster_of[path[i + 1]];
      present[a] = present[b] = 1;
      if (a != b) relations.emplace_back(a, b);
    }
  }

  std::vector<std::vector<int>> out(nclusters);
  for (auto [a, b] : relations) out[a].push_back(b);
  const auto comp = strong_components(nclusters, out);
  if (comp[cg.source_cluster] == comp[cg.sink_cluster])
    throw std::logic_error("source and sink clusters merged by antisymmetry");

  // Renumber components by their smallest cluster id.
  OrderDAG dag;
  std::vector<int> node_of_comp(nclusters, -1);
  for (int c = 0; c < nclusters; ++c) {
    if (!present[c]) continue;
    if (node_of_comp[comp[c]] < 0) {
      node_of_comp[comp[c]] = dag.node_count();
      dag.nodes.emplace_back();
    }
    dag.nodes[node_of_comp[comp[c]]].push_back(c);
  }
  dag.source = node_of_comp[comp[cg.source_cluster]];
  dag.sink = node_of_comp[comp[cg.sink_cluster]];

  std::vector<std::pair<int, int>> edges;
  for (auto [a, b] : relations) {
    const int x = node_of_comp[comp[a]];
    const int y = node_of_comp[comp[b]];
    if (x != y) edges.emplace_back(x, y);
  }

  // Keep covering relations only.
  const int m = dag.node_count();
  std::vector<std::set<int>> succ(m);
  for (auto [x, y] : edges) succ[x].insert(y);
  std::vector<std::vector<char>> reach(m, std::vector<char>(m, 0));
  std::function<void(int, int)> mark = [&](int root, int v) {
    for (int w : succ[v]) {
      if (!reach[root][w]) {
        reach[root][w] = 1;
        mark(root, w);
      }
    }
  };
  for (int v = 0; v < m; ++v) mark(v, v);
  auto implied = [&](int x, int y) {
    for (int w : succ[x])
      if (w != y && reach[w][y]) return true;
    return false;
  };
  for (auto [x, y] : edges)
    if (!implied(x, y)) dag.edges.emplace_back(x, y);
  std::sort(dag.edges.begin(), dag.edges.end());
  return dag;
}

std::vector<std::string> check_order_dag(const OrderDAG& dag) {
  std::vector<std::string> problems;
  const int m = dag.node_count();
  if (dag.edges.empty()) {
    if (m != 2) problems.push_back("edgeless order graph must consist of the two terminals");
    return problems;
  }
  std::vector<std::vector<int>> out(m), in(m);
  for (auto [x, y] : dag.edges) {
    out[x].push_back(y);
    in[y].push_back(x);
  }
  if (!in[dag.source].empty()) problems.push_back("source has incoming edges");
  if (!out[dag.sink].empty()) problems.push_back("sink has outgoing edges");

  std::vector<int> indeg(m);
  for (int v = 0; v < m; ++v) indeg[v] = static_cast<int>(in[v].size());
  std::vector<int> queue;
  for (int v = 0; v < m; ++v)
    if (indeg[v] == 0) queue.push_back(v);
  int visited = 0;
  while (!queue.empty()) {
    int v = queue.back();
    queue.pop_back();
    ++visited;
    for (int w : out[v])
      if (--indeg[w] == 0) queue.push_back(w);
  }
  if (visited != m) problems.push_back("order graph has a directed cycle");

  auto sweep = [&](int start, const std::vector<std::vector<int>>& adj) {
    std::vector<char> seen(m, 0);
    std::vector<int> stack{start};
    seen[start] = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : adj[v])
        if (!seen[w]) seen[w] = 1, stack.push_back(w);
    }
    return seen;
  };
  auto from_source = sweep(dag.source, out);
  auto to_sink = sweep(dag.sink, in);
  for (int v = 0; v < m; ++v)
    if (!from_source[v] || !to_sink[v])
      problems.push_back("node " + std::to_string(v) + " is not on a source-sink path");
  return problems;
}

int min_hamiltonian(const Graph& g, int n) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  return (n - 1) * max_flow(build_flow_network(g)).value;
}

std::vector<std::string> order_node_labels(const OrderDAG& dag, const ClusteredGraph& clusters,
                                           const FlowNetwork& net) {
  std::vector<std::string> labels;
  for (const auto& node : dag.nodes) {
    std::vector<int> members;
    for (int c : node) members.insert(members.end(), clusters.members[c].begin(), clusters.members[c].end());
    std::sort(members.begin(), members.end());
    std::string label = "[";
    for (std::size_t i = 0; i < members.size(); ++i) {
      if (i) label += ',';
      label += net.name(members[i]);
    }
    labels.push_back(label + "]");
  }
  return labels;
}

}  // namespace rtn
