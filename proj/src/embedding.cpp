#include "hcube/embedding.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

#include "json.hpp"

namespace hcube {

using nlohmann::json;

std::string LayerEmbedding::to_json() const {
  json j;
  j["N"] = ambient_dimension;
  j["k"] = layer;
  json map = json::object();
  for (int v = 0; v < static_cast<int>(image.size()); ++v)
    map[std::to_string(v)] = image[v].to_binary();
  j["map"] = std::move(map);
  return j.dump();
}

LayerEmbedding LayerEmbedding::from_json(const std::string& text) {
  json j = json::parse(text);
  LayerEmbedding emb;
  emb.ambient_dimension = j.at("N").get<int>();
  emb.layer = j.at("k").get<int>();
  const auto& map = j.at("map");
  emb.image.assign(map.size(), HypercubeVertex(emb.ambient_dimension));
  for (auto it = map.begin(); it != map.end(); ++it) {
    int v = std::stoi(it.key());
    if (v < 0 || v >= static_cast<int>(map.size()))
      throw std::runtime_error("embedding JSON: vertex ids must be 0..|map|-1");
    emb.image[v] = HypercubeVertex::from_binary(it.value().get<std::string>());
  }
  return emb;
}

EmbeddingReport verify_layer_embedding(const Graph& g, const LayerEmbedding& emb) {
  EmbeddingReport rep;
  auto fail = [&](std::string why) {
    rep.ok = false;
    rep.violation = std::move(why);
    return rep;
  };
  if (static_cast<int>(emb.image.size()) != g.vertex_count())
    return fail("image size does not match vertex count");
  for (const auto& img : emb.image)
    if (img.dimension() != emb.ambient_dimension)
      return fail("image dimension mismatch");

  std::unordered_set<BitVec, BitVecHash> seen;
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (!seen.insert(emb.image[v].bits()).second)
      return fail("injectivity: duplicated image " + emb.image[v].to_binary());
    int layer = emb.image[v].layer();
    if (layer != emb.layer && layer != emb.layer - 1)
      return fail("vertex " + std::to_string(v) + " lands in layer " +
                  std::to_string(layer) + ", outside layers {" +
                  std::to_string(emb.layer - 1) + "," + std::to_string(emb.layer) + "}");
  }
  for (int e = 0; e < g.edge_count(); ++e) {
    auto [u, v] = g.edge(e);
    if (emb.image[u].hamming(emb.image[v]) != 1)
      return fail("edge (" + std::to_string(u) + "," + std::to_string(v) +
                  ") maps to Hamming distance " +
                  std::to_string(emb.image[u].hamming(emb.image[v])));
  }
  return rep;
}

LayerEmbedding embed_from_very_nice(const Graph& g, const EdgeColoring& c, int root) {
  if (!g.connected())
    throw std::invalid_argument("embed_from_very_nice expects a connected graph");
  NicenessReport nice = check_nice(g, c);
  if (nice.verdict != NicenessVerdict::Nice)
    throw std::invalid_argument("embed_from_very_nice: coloring is not nice");

  const auto dist = g.bfs_distances(root);
  // C- = colors whose class sits at odd distance from the root.
  std::vector<int> class_dist(c.num_colors + 1, -1);
  for (int e = 0; e < g.edge_count(); ++e) {
    auto [u, v] = g.edge(e);
    int d = std::min(dist[u], dist[v]);
    int col = c.color[e];
    if (class_dist[col] < 0 || d < class_dist[col]) class_dist[col] = d;
  }
  BitVec cminus;
  for (int col = 1; col <= c.num_colors; ++col)
    if (class_dist[col] >= 0 && class_dist[col] % 2 == 1) cminus.set(col);

  LayerEmbedding emb;
  emb.ambient_dimension = c.num_colors;
  emb.layer = cminus.count() + 1;
  emb.image.assign(g.vertex_count(), HypercubeVertex(c.num_colors));

  std::vector<char> assigned(g.vertex_count(), 0);
  std::vector<BitVec> bits(g.vertex_count());
  bits[root] = cminus;
  assigned[root] = 1;
  std::vector<int> queue{root};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    int u = queue[head];
    const auto& nb = g.neighbors(u);
    const auto& ie = g.incident_edges(u);
    for (std::size_t i = 0; i < nb.size(); ++i) {
      int w = nb[i];
      if (assigned[w]) continue;
      BitVec b = bits[u];
      b.flip(c.color[ie[i]]);
      bits[w] = b;
      assigned[w] = 1;
      queue.push_back(w);
    }
  }
  for (int v = 0; v < g.vertex_count(); ++v)
    emb.image[v] = HypercubeVertex(c.num_colors, bits[v]);
  return emb;
}

EdgeColoring direction_coloring(const Graph& g, const LayerEmbedding& emb) {
  if (static_cast<int>(emb.image.size()) != g.vertex_count())
    throw std::invalid_argument("direction_coloring: embedding size mismatch");
  EdgeColoring c;
  c.color.assign(g.edge_count(), 0);
  std::vector<int> dense(emb.ambient_dimension + 1, 0);
  int next = 0;
  for (int e = 0; e < g.edge_count(); ++e) {
    auto [u, v] = g.edge(e);
    BitVec diff = emb.image[u].bits() ^ emb.image[v].bits();
    if (diff.count() != 1)
      throw std::invalid_argument(
          "direction_coloring: unverified embedding (edge image not at distance 1)");
    int dir = diff.max_element();
    if (dense[dir] == 0) dense[dir] = ++next;
    c.color[e] = dense[dir];
  }
  c.num_colors = next;
  return c;
}

std::optional<PartiteCertificate> check_partite(
    const LayerEmbedding& emb, const std::vector<std::vector<int>>& partition,
    std::string* why_not) {
  auto fail = [&](const std::string& why) {
    if (why_not) *why_not = why;
    return std::nullopt;
  };
  const int N = emb.ambient_dimension;
  std::vector<int> part_of(N + 1, -1);
  for (std::size_t p = 0; p < partition.size(); ++p)
    for (int coord : partition[p]) {
      if (coord < 1 || coord > N) return fail("partition: coordinate out of range");
      if (part_of[coord] >= 0) return fail("partition: coordinate repeated");
      part_of[coord] = static_cast<int>(p);
    }
  for (int coord = 1; coord <= N; ++coord)
    if (part_of[coord] < 0)
      return fail("partition does not cover coordinate " + std::to_string(coord));

  PartiteCertificate cert;
  cert.parts = partition;
  for (int v = 0; v < static_cast<int>(emb.image.size()); ++v) {
    if (emb.image[v].layer() != emb.layer) continue;  // lower-layer image
    std::vector<int> hits(partition.size(), 0);
    for (int coord : emb.image[v].elements()) hits[part_of[coord]] = coord;
    std::vector<int> counts(partition.size(), 0);
    for (int coord : emb.image[v].elements()) counts[part_of[coord]] += 1;
    for (std::size_t p = 0; p < partition.size(); ++p)
      if (counts[p] != 1)
        return fail("upper image of vertex " + std::to_string(v) + " meets part " +
                    std::to_string(p) + " " + std::to_string(counts[p]) + " times");
    cert.transversals.emplace_back(v, std::move(hits));
  }
  return cert;
}

// --- search engine ----------------------------------------------------------

namespace {

struct EngineState {
  const Graph& g;
  bool layered;
  int max_dims;
  std::uint64_t budget;
  std::uint64_t nodes = 0;
  bool budget_hit = false;
  bool found = false;

  std::vector<int> order;       // DFS preorder
  std::vector<int> dfs_parent;  // by vertex
  std::vector<std::vector<int>> dist;

  std::vector<BitVec> f;  // XOR-path image per vertex
  std::vector<int> h;     // height above the root layer (layered mode)
  BitVec cminus;
  int used = 0;
  std::unordered_set<BitVec, BitVecHash> images;

  explicit EngineState(const Graph& graph) : g(graph) {}

  bool rec(std::size_t i) {
    if (i == order.size()) {
      found = true;
      return true;
    }
    const int w = order[i];
    const int p = dfs_parent[w];
    const int limit = std::min(used + 1, max_dims);
    for (int j = 1; j <= limit; ++j) {
      if (++nodes > budget) {
        budget_hit = true;
        return true;
      }
      const bool fresh = (j == used + 1);
      BitVec fw = f[p];
      fw.flip(j);
      int hw = 0;
      if (layered) {
        bool in_parent_image = fresh ? (h[p] == 1) : (f[p].test(j) ^ cminus.test(j));
        hw = h[p] + (in_parent_image ? -1 : 1);
        if (hw < 0 || hw > 1) continue;
      }
      if (images.count(fw)) continue;
      bool ok = true;
      const auto& dw = dist[w];
      for (std::size_t t = 0; t < i; ++t) {
        int x = order[t];
        if ((fw ^ f[x]).count() > dw[x]) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;

      f[w] = fw;
      h[w] = hw;
      images.insert(fw);
      if (fresh) {
        ++used;
        if (layered && h[p] == 1) cminus.set(j);
      }
      if (rec(i + 1)) return true;
      if (fresh) {
        --used;
        if (layered) cminus.reset(j);
      }
      images.erase(fw);
    }
    return false;
  }
};

bool is_bipartite(const Graph& g) {
  std::vector<int> side(g.vertex_count(), -1);
  for (int s = 0; s < g.vertex_count(); ++s) {
    if (side[s] >= 0) continue;
    side[s] = 0;
    std::vector<int> queue{s};
    for (std::size_t head = 0; head < queue.size(); ++head) {
      int v = queue[head];
      for (int w : g.neighbors(v)) {
        if (side[w] < 0) {
          side[w] = side[v] ^ 1;
          queue.push_back(w);
        } else if (side[w] == side[v]) {
          return false;
        }
      }
    }
  }
  return true;
}

}  // namespace

CubeSearchOutcome search_cube_embedding(const Graph& g, int max_dims, bool layered,
                                        std::uint64_t budget) {
  if (!g.connected())
    throw std::invalid_argument("search_cube_embedding expects a connected graph");
  CubeSearchOutcome out;
  out.status = CubeSearchOutcome::Status::NoneExists;
  const int n = g.vertex_count();
  if (n == 0 || max_dims < 0) return out;
  if (!is_bipartite(g)) return out;
  if (max_dims < 64 && (std::uint64_t{1} << max_dims) < static_cast<std::uint64_t>(n))
    return out;  // pigeonhole
  if (n == 1) {
    out.status = CubeSearchOutcome::Status::Found;
    out.path_image.assign(1, BitVec{});
    return out;
  }

  EngineState st(g);
  st.layered = layered;
  st.max_dims = max_dims;
  st.budget = budget;

  // Root at a maximum-degree vertex; DFS preorder closes cycles early.
  int root = 0;
  for (int v = 1; v < n; ++v)
    if (g.degree(v) > g.degree(root)) root = v;
  st.dfs_parent.assign(n, -1);
  std::vector<char> visited(n, 0);
  std::vector<int> stack{root};
  visited[root] = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    st.order.push_back(v);
    const auto& nb = g.neighbors(v);
    for (auto it = nb.rbegin(); it != nb.rend(); ++it) {
      if (visited[*it]) continue;
      visited[*it] = 1;
      st.dfs_parent[*it] = v;
      stack.push_back(*it);
    }
  }
  // A stack-based preorder can pop a vertex whose recorded parent was reached
  // later than another assigned neighbor; re-parent to the earliest assigned
  // neighbor in order so f[parent] is always set. Any assigned neighbor works.
  std::vector<int> pos(n, -1);
  for (std::size_t i = 0; i < st.order.size(); ++i) pos[st.order[i]] = static_cast<int>(i);
  for (std::size_t i = 1; i < st.order.size(); ++i) {
    int w = st.order[i];
    int best = -1;
    for (int x : g.neighbors(w))
      if (pos[x] < static_cast<int>(i) && (best < 0 || pos[x] < pos[best])) best = x;
    st.dfs_parent[w] = best;
  }

  st.dist.assign(n, {});
  for (int v = 0; v < n; ++v) st.dist[v] = g.bfs_distances(v);
  st.f.assign(n, BitVec{});
  st.h.assign(n, 0);
  st.images.insert(BitVec{});

  st.rec(1);
  out.nodes = st.nodes;
  if (st.budget_hit) {
    out.status = CubeSearchOutcome::Status::BudgetExhausted;
  } else if (st.found) {
    out.status = CubeSearchOutcome::Status::Found;
    out.dims_used = st.used;
    out.path_image = st.f;
    out.root_image = st.cminus;
  }
  return out;
}

namespace {

struct ComponentEmbedding {
  std::vector<int> vertices;       // original vertex ids
  std::vector<BitVec> images;      // within its own direction block
  int dims = 0;
  int lower_layer = 0;             // |C-|
};

/// Runs iterative deepening on one component; fills `out` on success.
CubeSearchOutcome::Status decide_component(const Graph& g,
                                           const std::vector<int>& comp,
                                           std::uint64_t budget,
                                           std::uint64_t& nodes_used,
                                           ComponentEmbedding& out) {
  std::vector<int> new_of(g.vertex_count(), -1);
  for (std::size_t i = 0; i < comp.size(); ++i) new_of[comp[i]] = static_cast<int>(i);
  std::vector<std::pair<int, int>> edges;
  for (auto [u, v] : g.edges())
    if (new_of[u] >= 0 && new_of[v] >= 0) edges.emplace_back(new_of[u], new_of[v]);
  Graph sub(static_cast<int>(comp.size()), std::move(edges));

  const int cap = std::max(1, sub.vertex_count() - 1);
  for (int m = 1; m <= cap; ++m) {
    if (nodes_used >= budget) return CubeSearchOutcome::Status::BudgetExhausted;
    auto r = search_cube_embedding(sub, m, /*layered=*/true, budget - nodes_used);
    nodes_used += r.nodes;
    if (r.status == CubeSearchOutcome::Status::BudgetExhausted)
      return CubeSearchOutcome::Status::BudgetExhausted;
    if (r.status == CubeSearchOutcome::Status::Found) {
      out.vertices = comp;
      out.dims = std::max(r.dims_used, 1);
      out.lower_layer = r.root_image.count();
      out.images.clear();
      for (std::size_t i = 0; i < comp.size(); ++i)
        out.images.push_back(r.path_image[i] ^ r.root_image);
      return CubeSearchOutcome::Status::Found;
    }
  }
  return CubeSearchOutcome::Status::NoneExists;
}

}  // namespace

LayeredResult decide_layered(const Graph& g, std::uint64_t budget) {
  LayeredResult res;
  res.status = LayeredResult::Status::Layered;
  if (g.vertex_count() == 0) {
    res.embedding = LayerEmbedding{0, 1, {}};
    return res;
  }

  std::vector<ComponentEmbedding> parts;
  std::uint64_t nodes = 0;
  for (const auto& comp : g.components()) {
    ComponentEmbedding ce;
    auto status = decide_component(g, comp, budget, nodes, ce);
    if (status == CubeSearchOutcome::Status::BudgetExhausted) {
      res.status = LayeredResult::Status::BudgetExhausted;
      res.nodes = nodes;
      return res;
    }
    if (status == CubeSearchOutcome::Status::NoneExists) {
      res.status = LayeredResult::Status::NotLayered;
      res.nodes = nodes;
      return res;
    }
    parts.push_back(std::move(ce));
  }
  res.nodes = nodes;

  if (parts.size() == 1) {
    const auto& ce = parts.front();
    LayerEmbedding emb;
    emb.ambient_dimension = ce.dims;
    emb.layer = ce.lower_layer + 1;
    emb.image.assign(g.vertex_count(), HypercubeVertex(ce.dims));
    for (std::size_t i = 0; i < ce.vertices.size(); ++i)
      emb.image[ce.vertices[i]] = HypercubeVertex(ce.dims, ce.images[i]);
    res.embedding = std::move(emb);
    return res;
  }

  // Merge components: disjoint direction blocks plus one nonempty padding
  // block per component aligning every image into layers {K, K+1}.
  int max_lower = 0;
  for (const auto& ce : parts) max_lower = std::max(max_lower, ce.lower_layer);
  const int K = max_lower + 1;
  int total = 0;
  for (const auto& ce : parts) total += ce.dims + (K - ce.lower_layer);

  LayerEmbedding emb;
  emb.ambient_dimension = total;
  emb.layer = K + 1;
  emb.image.assign(g.vertex_count(), HypercubeVertex(total));
  int dir_offset = 0;
  int pad_offset = 0;
  for (const auto& ce : parts) pad_offset += ce.dims;
  for (const auto& ce : parts) {
    const int pad = K - ce.lower_layer;
    for (std::size_t i = 0; i < ce.vertices.size(); ++i) {
      BitVec b;
      for (int d = ce.images[i].next_element(0); d != 0; d = ce.images[i].next_element(d))
        b.set(dir_offset + d);
      for (int p = 1; p <= pad; ++p) b.set(pad_offset + p);
      emb.image[ce.vertices[i]] = HypercubeVertex(total, b);
    }
    dir_offset += ce.dims;
    pad_offset += pad;
  }
  res.embedding = std::move(emb);
  return res;
}

}  // namespace hcube
