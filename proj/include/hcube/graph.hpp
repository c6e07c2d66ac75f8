#ifndef HCUBE_GRAPH_HPP
#define HCUBE_GRAPH_HPP

#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace hcube {

/// Undirected simple graph on vertices 0..t-1 with optional string labels.
/// Immutable after construction; loops and multi-edges are rejected.
class Graph {
 public:
  Graph() = default;
  Graph(int vertex_count, std::vector<std::pair<int, int>> edges,
        std::vector<std::string> labels = {});

  int vertex_count() const { return vertex_count_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  /// Edges are stored with u < v, in insertion order.
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  std::pair<int, int> edge(int id) const { return edges_[id]; }

  const std::vector<int>& neighbors(int v) const { return adj_[v]; }
  /// Incident edge ids of v, parallel to neighbors(v).
  const std::vector<int>& incident_edges(int v) const { return inc_[v]; }
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }

  /// Edge id for {u,v}, -1 if absent.
  int find_edge(int u, int v) const;
  bool adjacent(int u, int v) const { return find_edge(u, v) >= 0; }

  bool has_labels() const { return !labels_.empty(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(int v) const { return labels_[v]; }

  /// Connected components as vertex lists, vertices ascending.
  std::vector<std::vector<int>> components() const;
  bool connected() const;

  /// BFS distances from src; -1 for unreachable vertices.
  std::vector<int> bfs_distances(int src) const;

  /// Vertex-relabelled copy: new id of v is perm[v].
  Graph relabeled(const std::vector<int>& perm) const;

 private:
  int vertex_count_ = 0;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::vector<int>> adj_;
  std::vector<std::vector<int>> inc_;
  std::vector<std::string> labels_;
};

/// Length of a shortest cycle; nullopt for forests.
std::optional<int> girth(const Graph& g);

/// Fundamental cycles of a BFS forest. For each non-tree edge, the cycle is
/// reported as a list of edge ids (the non-tree edge first).
struct CycleBasis {
  std::vector<int> parent;        // -1 at roots
  std::vector<int> parent_edge;   // edge id to parent, -1 at roots
  std::vector<int> root;          // component root per vertex
  std::vector<std::vector<int>> fundamental_cycles;
};
CycleBasis cycle_basis(const Graph& g);

/// Every simple cycle of length exactly L, canonical form: smallest vertex
/// first, smaller of its two cycle-neighbors second. Sorted output.
std::vector<std::vector<int>> cycles_of_length(const Graph& g, int L);

/// Callback form of the above; return false from the callback to stop early.
void for_each_cycle_of_length(const Graph& g, int L,
                              const std::function<bool(const std::vector<int>&)>& fn);

/// Canonical form of an arbitrary rotation/reflection of a simple cycle.
std::vector<int> canonical_cycle(const std::vector<int>& cycle);

// --- file I/O -------------------------------------------------------------
// JSON format: { "vertices": t, "labels": [ ... optional ... ],
//                "edges": [[u,v], ...] }, 0-based ids.

Graph load_graph(const std::string& path);
Graph load_graph(std::istream& in, const std::string& origin = "<stream>");
void save_graph(const Graph& g, const std::string& path);
std::string graph_to_json(const Graph& g);
std::string to_dot(const Graph& g);

}  // namespace hcube

#endif
