#include "hcube/graph.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "json.hpp"

namespace hcube {

namespace {
std::uint64_t edge_key(int u, int v) {
  if (u > v) std::swap(u, v);
  return (static_cast<std::uint64_t>(u) << 32) | static_cast<std::uint32_t>(v);
}
}  // namespace

Graph::Graph(int vertex_count, std::vector<std::pair<int, int>> edges,
             std::vector<std::string> labels)
    : vertex_count_(vertex_count), labels_(std::move(labels)) {
  if (vertex_count < 0) throw std::invalid_argument("negative vertex count");
  if (!labels_.empty() && static_cast<int>(labels_.size()) != vertex_count)
    throw std::invalid_argument("label count does not match vertex count");
  adj_.assign(vertex_count, {});
  inc_.assign(vertex_count, {});
  edges_.reserve(edges.size());
  std::unordered_map<std::uint64_t, int> seen;
  for (auto [u, v] : edges) {
    if (u < 0 || u >= vertex_count || v < 0 || v >= vertex_count)
      throw std::invalid_argument("edge endpoint out of range: (" +
                                  std::to_string(u) + "," + std::to_string(v) + ")");
    if (u == v)
      throw std::invalid_argument("loop at vertex " + std::to_string(u));
    if (u > v) std::swap(u, v);
    if (!seen.emplace(edge_key(u, v), 1).second)
      throw std::invalid_argument("duplicate edge (" + std::to_string(u) + "," +
                                  std::to_string(v) + ")");
    int id = static_cast<int>(edges_.size());
    edges_.emplace_back(u, v);
    adj_[u].push_back(v);
    adj_[v].push_back(u);
    inc_[u].push_back(id);
    inc_[v].push_back(id);
  }
}

int Graph::find_edge(int u, int v) const {
  if (u < 0 || v < 0 || u >= vertex_count_ || v >= vertex_count_ || u == v)
    return -1;
  const auto& nb = adj_[u];
  for (std::size_t i = 0; i < nb.size(); ++i)
    if (nb[i] == v) return inc_[u][i];
  return -1;
}

std::vector<std::vector<int>> Graph::components() const {
  std::vector<std::vector<int>> comps;
  std::vector<int> comp_of(vertex_count_, -1);
  for (int s = 0; s < vertex_count_; ++s) {
    if (comp_of[s] >= 0) continue;
    std::vector<int> comp{s};
    comp_of[s] = static_cast<int>(comps.size());
    for (std::size_t head = 0; head < comp.size(); ++head)
      for (int w : adj_[comp[head]])
        if (comp_of[w] < 0) {
          comp_of[w] = comp_of[s];
          comp.push_back(w);
        }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

bool Graph::connected() const {
  return vertex_count_ <= 1 || components().size() == 1;
}

std::vector<int> Graph::bfs_distances(int src) const {
  std::vector<int> dist(vertex_count_, -1);
  std::deque<int> queue{src};
  dist[src] = 0;
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    for (int w : adj_[v])
      if (dist[w] < 0) {
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
  }
  return dist;
}

Graph Graph::relabeled(const std::vector<int>& perm) const {
  if (static_cast<int>(perm.size()) != vertex_count_)
    throw std::invalid_argument("relabeling size mismatch");
  std::vector<std::pair<int, int>> edges;
  edges.reserve(edges_.size());
  for (auto [u, v] : edges_) edges.emplace_back(perm[u], perm[v]);
  std::vector<std::string> labels;
  if (!labels_.empty()) {
    labels.resize(vertex_count_);
    for (int v = 0; v < vertex_count_; ++v) labels[perm[v]] = labels_[v];
  }
  return Graph(vertex_count_, std::move(edges), std::move(labels));
}

std::optional<int> girth(const Graph& g) {
  // BFS from every vertex; a non-tree edge seen at levels (d[u], d[w]) closes
  // a cycle of length d[u]+d[w]+1 through the root. The minimum over all
  // roots is exact for unweighted graphs.
  int best = -1;
  const int n = g.vertex_count();
  std::vector<int> dist(n), par(n);
  for (int s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    std::fill(par.begin(), par.end(), -1);
    std::deque<int> queue{s};
    dist[s] = 0;
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      if (best >= 0 && 2 * dist[v] >= best) break;
      for (int w : g.neighbors(v)) {
        if (dist[w] < 0) {
          dist[w] = dist[v] + 1;
          par[w] = v;
          queue.push_back(w);
        } else if (w != par[v] && dist[w] >= dist[v]) {
          int len = dist[v] + dist[w] + 1;
          if (best < 0 || len < best) best = len;
        }
      }
    }
  }
  if (best < 0) return std::nullopt;
  return best;
}

CycleBasis cycle_basis(const Graph& g) {
  CycleBasis cb;
  const int n = g.vertex_count();
  cb.parent.assign(n, -1);
  cb.parent_edge.assign(n, -1);
  cb.root.assign(n, -1);
  std::vector<char> tree_edge(g.edge_count(), 0);
  for (int s = 0; s < n; ++s) {
    if (cb.root[s] >= 0) continue;
    cb.root[s] = s;
    std::deque<int> queue{s};
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      const auto& nb = g.neighbors(v);
      const auto& ie = g.incident_edges(v);
      for (std::size_t i = 0; i < nb.size(); ++i) {
        int w = nb[i];
        if (cb.root[w] < 0) {
          cb.root[w] = s;
          cb.parent[w] = v;
          cb.parent_edge[w] = ie[i];
          tree_edge[ie[i]] = 1;
          queue.push_back(w);
        }
      }
    }
  }
  // Non-tree edges, in id order: cycle = edge + XOR of the two root paths.
  std::vector<int> depth(n, 0);
  for (int v = 0; v < n; ++v) {
    int d = 0;
    for (int u = v; cb.parent[u] >= 0; u = cb.parent[u]) ++d;
    depth[v] = d;
  }
  for (int e = 0; e < g.edge_count(); ++e) {
    if (tree_edge[e]) continue;
    auto [u, v] = g.edge(e);
    std::vector<int> cyc{e};
    int a = u, b = v;
    while (depth[a] > depth[b]) {
      cyc.push_back(cb.parent_edge[a]);
      a = cb.parent[a];
    }
    while (depth[b] > depth[a]) {
      cyc.push_back(cb.parent_edge[b]);
      b = cb.parent[b];
    }
    while (a != b) {
      cyc.push_back(cb.parent_edge[a]);
      cyc.push_back(cb.parent_edge[b]);
      a = cb.parent[a];
      b = cb.parent[b];
    }
    cb.fundamental_cycles.push_back(std::move(cyc));
  }
  return cb;
}

std::vector<int> canonical_cycle(const std::vector<int>& cycle) {
  const int L = static_cast<int>(cycle.size());
  if (L < 3) throw std::invalid_argument("cycle must have length >= 3");
  int mpos = 0;
  for (int i = 1; i < L; ++i)
    if (cycle[i] < cycle[mpos]) mpos = i;
  std::vector<int> out(L);
  int nxt = cycle[(mpos + 1) % L];
  int prv = cycle[(mpos + L - 1) % L];
  if (nxt <= prv) {
    for (int i = 0; i < L; ++i) out[i] = cycle[(mpos + i) % L];
  } else {
    for (int i = 0; i < L; ++i) out[i] = cycle[(mpos - i + L) % L];
  }
  return out;
}

void for_each_cycle_of_length(const Graph& g, int L,
                              const std::function<bool(const std::vector<int>&)>& fn) {
  if (L < 3) throw std::invalid_argument("cycle length must be >= 3");
  const int n = g.vertex_count();
  std::vector<char> on_path(n, 0);
  std::vector<int> path;
  std::vector<int> dist;
  bool stop = false;

  // Cycles are found with their smallest vertex as the DFS start; vertices
  // below the start are excluded. The distance-to-start bound (within the
  // allowed vertex set) prunes paths that can no longer close in time.
  auto bfs_from = [&](int s) {
    dist.assign(n, -1);
    std::deque<int> queue{s};
    dist[s] = 0;
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      for (int w : g.neighbors(v))
        if (w > s && dist[w] < 0) {
          dist[w] = dist[v] + 1;
          queue.push_back(w);
        }
    }
  };

  std::function<void(int, int)> dfs = [&](int s, int v) {
    if (stop) return;
    int p = static_cast<int>(path.size());
    if (p == L) {
      // close if adjacent to s and direction canonical (second < last)
      if (path[1] < path[L - 1] && g.adjacent(v, s))
        if (!fn(path)) stop = true;
      return;
    }
    for (int w : g.neighbors(v)) {
      if (w <= s || on_path[w]) continue;
      if (dist[w] < 0 || dist[w] > L - p) continue;
      on_path[w] = 1;
      path.push_back(w);
      dfs(s, w);
      path.pop_back();
      on_path[w] = 0;
      if (stop) return;
    }
  };

  for (int s = 0; s < n && !stop; ++s) {
    if (g.degree(s) < 2) continue;
    bfs_from(s);
    path.assign(1, s);
    on_path[s] = 1;
    dfs(s, s);
    on_path[s] = 0;
  }
}

std::vector<std::vector<int>> cycles_of_length(const Graph& g, int L) {
  std::vector<std::vector<int>> out;
  for_each_cycle_of_length(g, L, [&](const std::vector<int>& c) {
    out.push_back(c);
    return true;
  });
  std::sort(out.begin(), out.end());
  return out;
}

// --- file I/O ---------------------------------------------------------------

using nlohmann::json;

namespace {

Graph graph_from_json(const json& j, const std::string& origin) {
  try {
    if (!j.is_object() || !j.contains("vertices") || !j.contains("edges"))
      throw std::invalid_argument("expected object with \"vertices\" and \"edges\"");
    int t = j.at("vertices").get<int>();
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2)
        throw std::invalid_argument("edge entries must be [u, v] pairs");
      edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    std::vector<std::string> labels;
    if (j.contains("labels")) labels = j.at("labels").get<std::vector<std::string>>();
    return Graph(t, std::move(edges), std::move(labels));
  } catch (const std::exception& ex) {
    throw std::runtime_error(origin + ": " + ex.what());
  }
}

}  // namespace

Graph load_graph(std::istream& in, const std::string& origin) {
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& ex) {
    throw std::runtime_error(origin + ": " + ex.what());
  }
  return graph_from_json(j, origin);
}

Graph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error(path + ": cannot open");
  return load_graph(in, path);
}

std::string graph_to_json(const Graph& g) {
  json j;
  j["vertices"] = g.vertex_count();
  if (g.has_labels()) j["labels"] = g.labels();
  auto edges = json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u, v});
  j["edges"] = std::move(edges);
  return j.dump();
}

void save_graph(const Graph& g, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error(path + ": cannot open for writing");
  out << graph_to_json(g) << "\n";
}

std::string to_dot(const Graph& g) {
  std::ostringstream out;
  out << "graph G {\n";
  for (int v = 0; v < g.vertex_count(); ++v) {
    out << "  " << v;
    if (g.has_labels()) out << " [label=\"" << g.label(v) << "\"]";
    out << ";\n";
  }
  for (auto [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace hcube
