#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace rtn {

enum class Region { A, B };

char region_letter(Region r);

/// Raised by the graph-file parser and by Graph construction.
class GraphError : public std::runtime_error {
 public:
  GraphError(const std::string& message, int line = 0);
  int line() const noexcept { return line_; }

 private:
  int line_;
};

struct BulkEdge {
  std::string u;  // u <= v lexicographically
  std::string v;
  auto operator<=>(const BulkEdge&) const = default;
};

struct HalfEdge {
  std::string vertex;
  Region region;
  auto operator<=>(const HalfEdge&) const = default;
};

/// Random tensor network topology: vertices, a multiset of bulk edges and a
/// list of boundary half-edges labelled A or B.
///
/// All containers are kept in canonical (lexicographic) order, which fixes
/// every downstream iteration order. Vertex ids are opaque strings.
class Graph {
 public:
  Graph() = default;

  /// Throws GraphError on duplicate vertices or unknown endpoints.
  Graph(std::vector<std::string> vertices, std::vector<BulkEdge> bulk_edges,
        std::vector<HalfEdge> half_edges);

  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::vector<BulkEdge>& bulk_edges() const { return bulk_edges_; }
  const std::vector<HalfEdge>& half_edges() const { return half_edges_; }

  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t bulk_count() const { return bulk_edges_.size(); }
  std::size_t boundary_count() const { return half_edges_.size(); }
  std::size_t edge_count() const { return bulk_count() + boundary_count(); }

  /// Position of `id` in canonical vertex order; throws GraphError if absent.
  std::size_t index_of(std::string_view id) const;
  bool has_vertex(std::string_view id) const;

  /// The same topology with every half-edge relabelled as `region`.
  Graph relabelled(Region region) const;

  bool operator==(const Graph&) const = default;

 private:
  std::vector<std::string> vertices_;
  std::vector<BulkEdge> bulk_edges_;
  std::vector<HalfEdge> half_edges_;
};

/// Indices into Graph::half_edges() split by region.
struct Bipartition {
  std::vector<std::size_t> a;
  std::vector<std::size_t> b;
};

Bipartition bipartition(const Graph& g);

struct ValidationReport {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

ValidationReport validate(const Graph& g);

/// Parses the line-based graph format:
///   vertex <id> | edge <id> <id> | half <id> <A|B>, '#' starts a comment.
Graph parse_graph(std::string_view text);
Graph load_graph(const std::string& path);

/// Canonical text form; parse_graph(serialize(g)) == g.
std::string serialize(const Graph& g);

// Flow network G_{A|B}. Node 0 is the source (id), nodes 1..|V| are the graph
// vertices in canonical order and node |V|+1 is the sink (gamma).
enum class NetEdgeKind { Bulk, Source, Sink };

struct NetEdge {
  int u;
  int v;
  NetEdgeKind kind;
};

class FlowNetwork {
 public:
  FlowNetwork(std::vector<std::string> node_names, std::vector<NetEdge> edges);

  int source() const { return 0; }
  int sink() const { return static_cast<int>(names_.size()) - 1; }
  int node_count() const { return static_cast<int>(names_.size()); }
  const std::vector<NetEdge>& edges() const { return edges_; }
  const std::string& name(int node) const { return names_.at(node); }
  const std::vector<std::string>& names() const { return names_; }

 private:
  std::vector<std::string> names_;
  std::vector<NetEdge> edges_;
};

/// Bulk edges first (canonical order), then one source edge per B
/// half-edge and one sink edge per A half-edge. Unit capacities throughout.
FlowNetwork build_flow_network(const Graph& g);

}  // namespace rtn
