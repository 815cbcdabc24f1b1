#include "rtn/graph.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>

namespace rtn {

char region_letter(Region r) { return r == Region::A ? 'A' : 'B'; }

GraphError::GraphError(const std::string& message, int line)
    : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + message
                                  : message),
      line_(line) {}

Graph::Graph(std::vector<std::string> vertices, std::vector<BulkEdge> bulk_edges,
             std::vector<HalfEdge> half_edges)
    : vertices_(std::move(vertices)),
      bulk_edges_(std::move(bulk_edges)),
      half_edges_(std::move(half_edges)) {
  std::sort(vertices_.begin(), vertices_.end());
  auto dup = std::adjacent_find(vertices_.begin(), vertices_.end());
  if (dup != vertices_.end()) throw GraphError("duplicate vertex '" + *dup + "'");

  for (auto& e : bulk_edges_) {
    if (!has_vertex(e.u)) throw GraphError("edge references unknown vertex '" + e.u + "'");
    if (!has_vertex(e.v)) throw GraphError("edge references unknown vertex '" + e.v + "'");
    if (e.v < e.u) std::swap(e.u, e.v);
  }
  for (const auto& h : half_edges_) {
    if (!has_vertex(h.vertex))
      throw GraphError("half-edge references unknown vertex '" + h.vertex + "'");
  }
  std::sort(bulk_edges_.begin(), bulk_edges_.end());
  std::sort(half_edges_.begin(), half_edges_.end());
}

bool Graph::has_vertex(std::string_view id) const {
  return std::binary_search(vertices_.begin(), vertices_.end(), id);
}

std::size_t Graph::index_of(std::string_view id) const {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), id);
  if (it == vertices_.end() || *it != id)
    throw GraphError("unknown vertex '" + std::string(id) + "'");
  return static_cast<std::size_t>(it - vertices_.begin());
}

Graph Graph::relabelled(Region region) const {
  auto halves = half_edges_;
  for (auto& h : halves) h.region = region;
  return Graph(vertices_, bulk_edges_, std::move(halves));
}

Bipartition bipartition(const Graph& g) {
  Bipartition p;
  const auto& halves = g.half_edges();
  for (std::size_t i = 0; i < halves.size(); ++i)
    (halves[i].region == Region::A ? p.a : p.b).push_back(i);
  return p;
}

ValidationReport validate(const Graph& g) {
  ValidationReport report;
  const std::size_t n = g.vertex_count();
  if (n == 0) {
    report.violations.push_back("graph has no vertices");
    return report;
  }

  // Endpoints are checked at construction, but a Graph-shaped value may come
  // from anywhere, so re-check rather than index blindly.
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& e : g.bulk_edges()) {
    if (!g.has_vertex(e.u) || !g.has_vertex(e.v)) {
      report.violations.push_back("dangling bulk edge " + e.u + " -- " + e.v);
      continue;
    }
    if (e.u == e.v) {
      report.violations.push_back("self-loop bulk edge on '" + e.u + "'");
      continue;
    }
    parent[find(g.index_of(e.u))] = find(g.index_of(e.v));
  }
  for (const auto& h : g.half_edges()) {
    if (!g.has_vertex(h.vertex))
      report.violations.push_back("dangling half-edge on '" + h.vertex + "'");
  }

  std::set<std::size_t> roots;
  for (std::size_t i = 0; i < n; ++i) roots.insert(find(i));
  if (roots.size() > 1) {
    report.violations.push_back("bulk disconnected: " + std::to_string(roots.size()) +
                                " components");
  }
  return report;
}

namespace {

std::vector<std::string> tokenize(std::string_view line) {
  std::vector<std::string> tokens;
  std::istringstream in{std::string(line)};
  std::string tok;
  while (in >> tok) tokens.push_back(tok);
  return tokens;
}

}  // namespace

Graph parse_graph(std::string_view text) {
  std::vector<std::string> vertices;
  std::set<std::string> seen;
  std::vector<std::pair<BulkEdge, int>> edges;
  std::vector<std::pair<HalfEdge, int>> halves;

  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;

    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    auto tokens = tokenize(line);
    if (tokens.empty()) continue;

    const auto& kw = tokens[0];
    if (kw == "vertex") {
      if (tokens.size() != 2) throw GraphError("malformed vertex line", line_no);
      if (!seen.insert(tokens[1]).second)
        throw GraphError("duplicate vertex '" + tokens[1] + "'", line_no);
      vertices.push_back(tokens[1]);
    } else if (kw == "edge") {
      if (tokens.size() != 3) throw GraphError("malformed edge line", line_no);
      edges.push_back({{tokens[1], tokens[2]}, line_no});
    } else if (kw == "half") {
      if (tokens.size() != 3 || (tokens[2] != "A" && tokens[2] != "B"))
        throw GraphError("malformed half line (expected: half <id> <A|B>)", line_no);
      halves.push_back({{tokens[1], tokens[2] == "A" ? Region::A : Region::B}, line_no});
    } else {
      throw GraphError("unknown keyword '" + kw + "'", line_no);
    }
  }

  // Resolve references after the whole file is read so declarations may
  // appear in any order.
  std::vector<BulkEdge> bulk;
  for (auto& [e, ln] : edges) {
    for (const auto* id : {&e.u, &e.v})
      if (!seen.count(*id)) throw GraphError("unknown vertex '" + *id + "'", ln);
    bulk.push_back(std::move(e));
  }
  std::vector<HalfEdge> boundary;
  for (auto& [h, ln] : halves) {
    if (!seen.count(h.vertex)) throw GraphError("unknown vertex '" + h.vertex + "'", ln);
    boundary.push_back(std::move(h));
  }
  return Graph(std::move(vertices), std::move(bulk), std::move(boundary));
}

Graph load_graph(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw GraphError("cannot open graph file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_graph(ss.str());
}

std::string serialize(const Graph& g) {
  std::ostringstream out;
  for (const auto& v : g.vertices()) out << "vertex " << v << '\n';
  for (const auto& e : g.bulk_edges()) out << "edge " << e.u << ' ' << e.v << '\n';
  for (const auto& h : g.half_edges())
    out << "half " << h.vertex << ' ' << region_letter(h.region) << '\n';
  return out.str();
}

FlowNetwork::FlowNetwork(std::vector<std::string> node_names, std::vector<NetEdge> edges)
    : names_(std::move(node_names)), edges_(std::move(edges)) {
  if (names_.size() < 2) throw std::invalid_argument("flow network needs source and sink");
}

FlowNetwork build_flow_network(const Graph& g) {
  std::vector<std::string> names;
  names.reserve(g.vertex_count() + 2);
  names.push_back("id");
  for (const auto& v : g.vertices()) names.push_back(v);
  names.push_back("gamma");
  const int sink = static_cast<int>(names.size()) - 1;

  auto node = [&](const std::string& id) { return static_cast<int>(g.index_of(id)) + 1; };

  std::vector<NetEdge> edges;
  edges.reserve(g.edge_count());
  for (const auto& e : g.bulk_edges()) edges.push_back({node(e.u), node(e.v), NetEdgeKind::Bulk});
  for (const auto& h : g.half_edges())
    if (h.region == Region::B) edges.push_back({0, node(h.vertex), NetEdgeKind::Source});
  for (const auto& h : g.half_edges())
    if (h.region == Region::A) edges.push_back({node(h.vertex), sink, NetEdgeKind::Sink});
  return FlowNetwork(std::move(names), std::move(edges));
}

}  // namespace rtn
