#include "hcube/coloring.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

#include "hcube/embedding.hpp"

namespace hcube {

void validate_coloring(const Graph& g, const EdgeColoring& c) {
  if (static_cast<int>(c.color.size()) != g.edge_count())
    throw std::invalid_argument("partial coloring: expected " +
                                std::to_string(g.edge_count()) + " colors, got " +
                                std::to_string(c.color.size()));
  std::vector<char> used(c.num_colors + 1, 0);
  for (int col : c.color) {
    if (col < 1 || col > c.num_colors)
      throw std::invalid_argument("color id " + std::to_string(col) +
                                  " outside 1.." + std::to_string(c.num_colors));
    used[col] = 1;
  }
  for (int col = 1; col <= c.num_colors; ++col)
    if (!used[col])
      throw std::invalid_argument("color ids have a gap at " + std::to_string(col));
}

namespace {

/// Tree path between two vertices of the same BFS forest, as a vertex list.
std::vector<int> tree_path(const CycleBasis& cb, int u, int v) {
  auto depth = [&](int x) {
    int d = 0;
    for (; cb.parent[x] >= 0; x = cb.parent[x]) ++d;
    return d;
  };
  std::vector<int> from_u{u}, from_v{v};
  int du = depth(u), dv = depth(v);
  int a = u, b = v;
  while (du > dv) {
    a = cb.parent[a];
    from_u.push_back(a);
    --du;
  }
  while (dv > du) {
    b = cb.parent[b];
    from_v.push_back(b);
    --dv;
  }
  while (a != b) {
    a = cb.parent[a];
    b = cb.parent[b];
    from_u.push_back(a);
    from_v.push_back(b);
  }
  from_u.pop_back();  // drop the meeting vertex once
  from_u.insert(from_u.end(), from_v.rbegin(), from_v.rend());
  return from_u;
}

}  // namespace

NicenessReport check_nice(const Graph& g, const EdgeColoring& c) {
  validate_coloring(g, c);
  NicenessReport rep;
  rep.verdict = NicenessVerdict::Nice;

  CycleBasis cb = cycle_basis(g);

  // (i) every color even on every cycle; parity vectors are additive over the
  // binary cycle space, so the fundamental cycles suffice.
  std::vector<int> mult(c.num_colors + 1, 0);
  for (const auto& cyc : cb.fundamental_cycles) {
    std::fill(mult.begin(), mult.end(), 0);
    for (int e : cyc) mult[c.color[e]] ^= 1;
    for (int col = 1; col <= c.num_colors; ++col)
      if (mult[col]) {
        rep.verdict = NicenessVerdict::NotNice;
        rep.odd_cycle = OddColorCycleWitness{col, cyc};
        return rep;
      }
  }

  // (ii) distinct per-color parity signatures of root->v tree paths. Two
  // equal signatures give a path on which every color appears evenly.
  // Vertices are processed parents-first (by forest depth).
  const int words = (c.num_colors + 64) / 64;
  std::vector<std::vector<std::uint64_t>> sig(g.vertex_count(),
                                              std::vector<std::uint64_t>(words, 0));
  std::map<std::pair<int, std::vector<std::uint64_t>>, int> seen;
  std::vector<int> depth(g.vertex_count(), 0);
  for (int v = 0; v < g.vertex_count(); ++v) {
    int d = 0;
    for (int x = v; cb.parent[x] >= 0; x = cb.parent[x]) ++d;
    depth[v] = d;
  }
  std::vector<int> order(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v) order[v] = v;
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return depth[a] < depth[b]; });
  for (int v : order) {
    if (cb.parent[v] >= 0) {
      sig[v] = sig[cb.parent[v]];
      int col = c.color[cb.parent_edge[v]];
      sig[v][(col - 1) / 64] ^= 1ull << ((col - 1) % 64);
    }
    auto key = std::make_pair(cb.root[v], sig[v]);
    auto [it, inserted] = seen.emplace(key, v);
    if (!inserted) {
      rep.verdict = NicenessVerdict::NotNice;
      rep.even_path = EvenPathWitness{tree_path(cb, it->second, v)};
      return rep;
    }
  }
  return rep;
}

namespace {

/// Finds an odd-length simple path avoiding color `col` between endpoints of
/// two distinct edges of that color. Exists whenever a nice coloring fails
/// the very nice condition.
std::optional<OddAvoidingPathWitness> find_odd_avoiding_path(const Graph& g,
                                                             const EdgeColoring& c) {
  for (int col = 1; col <= c.num_colors; ++col) {
    std::vector<int> class_edges;
    for (int e = 0; e < g.edge_count(); ++e)
      if (c.color[e] == col) class_edges.push_back(e);
    if (class_edges.size() < 2) continue;

    std::vector<char> is_endpoint_of(g.vertex_count(), 0);
    // endpoint -> one class edge it belongs to (enough for the witness)
    std::vector<int> owner(g.vertex_count(), -1);
    for (int e : class_edges) {
      auto [u, v] = g.edge(e);
      is_endpoint_of[u] = is_endpoint_of[v] = 1;
      owner[u] = owner[v] = e;
    }

    std::vector<char> on_path(g.vertex_count(), 0);
    std::vector<int> path;
    std::optional<OddAvoidingPathWitness> result;

    std::function<void(int, int)> dfs = [&](int start_edge, int v) {
      if (result) return;
      if (path.size() >= 2 && path.size() % 2 == 0 && is_endpoint_of[v] &&
          owner[v] != start_edge) {
        // path.size() vertices = odd edge count when size is even
        result = OddAvoidingPathWitness{col, start_edge, owner[v], path};
      }
      if (result) return;
      const auto& nb = g.neighbors(v);
      const auto& ie = g.incident_edges(v);
      for (std::size_t i = 0; i < nb.size(); ++i) {
        if (c.color[ie[i]] == col || on_path[nb[i]]) continue;
        on_path[nb[i]] = 1;
        path.push_back(nb[i]);
        dfs(start_edge, nb[i]);
        path.pop_back();
        on_path[nb[i]] = 0;
        if (result) return;
      }
    };

    for (int e : class_edges) {
      for (int x : {g.edge(e).first, g.edge(e).second}) {
        path.assign(1, x);
        on_path[x] = 1;
        dfs(e, x);
        on_path[x] = 0;
        if (result) return result;
      }
    }
  }
  return std::nullopt;
}

}  // namespace

NicenessReport check_very_nice(const Graph& g, const EdgeColoring& c) {
  NicenessReport rep = check_nice(g, c);
  if (rep.verdict == NicenessVerdict::NotNice) return rep;

  // The Theorem-2.2 embedding lands in two consecutive layers iff the
  // coloring is very nice; run it per component.
  bool ok = true;
  for (const auto& comp : g.components()) {
    std::vector<int> new_of(g.vertex_count(), -1);
    for (std::size_t i = 0; i < comp.size(); ++i) new_of[comp[i]] = static_cast<int>(i);
    std::vector<std::pair<int, int>> edges;
    EdgeColoring sub_c;
    for (int e = 0; e < g.edge_count(); ++e) {
      auto [u, v] = g.edge(e);
      if (new_of[u] < 0) continue;
      edges.emplace_back(new_of[u], new_of[v]);
      sub_c.color.push_back(c.color[e]);
    }
    Graph sub(static_cast<int>(comp.size()), std::move(edges));
    // Compact the color ids used by this component.
    {
      std::vector<int> remap(c.num_colors + 1, 0);
      int next = 0;
      for (int& col : sub_c.color) {
        if (remap[col] == 0) remap[col] = ++next;
        col = remap[col];
      }
      sub_c.num_colors = next;
    }
    if (sub.edge_count() == 0) continue;
    LayerEmbedding emb = embed_from_very_nice(sub, sub_c, 0);
    for (const auto& img : emb.image) {
      int layer = img.layer();
      if (layer != emb.layer && layer != emb.layer - 1) {
        ok = false;
        break;
      }
    }
    if (!ok) break;
  }

  if (ok) {
    rep.verdict = NicenessVerdict::VeryNice;
  } else {
    rep.verdict = NicenessVerdict::NiceNotVeryNice;
    rep.odd_avoiding_path = find_odd_avoiding_path(g, c);
  }
  return rep;
}

namespace {

struct ComponentPieces {
  std::vector<Graph> subgraphs;
  std::vector<std::vector<int>> edge_ids;  // original edge ids per component
};

ComponentPieces split_components(const Graph& g) {
  ComponentPieces out;
  for (const auto& comp : g.components()) {
    std::vector<int> new_of(g.vertex_count(), -1);
    for (std::size_t i = 0; i < comp.size(); ++i) new_of[comp[i]] = static_cast<int>(i);
    std::vector<std::pair<int, int>> edges;
    std::vector<int> ids;
    for (int e = 0; e < g.edge_count(); ++e) {
      auto [u, v] = g.edge(e);
      if (new_of[u] < 0) continue;
      edges.emplace_back(new_of[u], new_of[v]);
      ids.push_back(e);
    }
    out.subgraphs.emplace_back(static_cast<int>(comp.size()), std::move(edges));
    out.edge_ids.push_back(std::move(ids));
  }
  return out;
}

/// Reads off the per-edge direction from a search outcome (closure edges take
/// the unique differing coordinate).
std::vector<int> edge_directions(const Graph& g, const std::vector<BitVec>& f) {
  std::vector<int> dirs(g.edge_count());
  for (int e = 0; e < g.edge_count(); ++e) {
    auto [u, v] = g.edge(e);
    dirs[e] = (f[u] ^ f[v]).max_element();
  }
  return dirs;
}

ColoringSearchResult search_coloring(const Graph& g, int max_colors,
                                     std::uint64_t budget, bool layered) {
  ColoringSearchResult res;
  res.status = ColoringSearchResult::Status::Found;
  EdgeColoring combined;
  combined.color.assign(g.edge_count(), 0);
  int palette = 0;

  auto pieces = split_components(g);
  for (std::size_t ci = 0; ci < pieces.subgraphs.size(); ++ci) {
    const Graph& sub = pieces.subgraphs[ci];
    if (sub.edge_count() == 0) continue;
    const int cap = std::min(max_colors, std::max(1, sub.vertex_count() - 1));
    bool found = false;
    for (int m = 1; m <= cap && !found; ++m) {
      if (res.nodes >= budget) {
        res.status = ColoringSearchResult::Status::BudgetExhausted;
        return res;
      }
      auto r = search_cube_embedding(sub, m, layered, budget - res.nodes);
      res.nodes += r.nodes;
      if (r.status == CubeSearchOutcome::Status::BudgetExhausted) {
        res.status = ColoringSearchResult::Status::BudgetExhausted;
        return res;
      }
      if (r.status == CubeSearchOutcome::Status::Found) {
        auto dirs = edge_directions(sub, r.path_image);
        for (std::size_t i = 0; i < dirs.size(); ++i)
          combined.color[pieces.edge_ids[ci][i]] = dirs[i];
        palette = std::max(palette, r.dims_used);
        found = true;
      }
    }
    if (!found) {
      res.status = ColoringSearchResult::Status::NoneExists;
      return res;
    }
  }
  combined.num_colors = palette;
  res.coloring = std::move(combined);
  return res;
}

}  // namespace

ColoringSearchResult find_nice_coloring(const Graph& g, int max_colors,
                                        std::uint64_t budget) {
  if (max_colors <= 0) max_colors = std::max(1, g.edge_count());
  return search_coloring(g, max_colors, budget, /*layered=*/false);
}

ColoringSearchResult find_very_nice_coloring(const Graph& g, std::uint64_t budget) {
  return search_coloring(g, std::max(1, g.edge_count()), budget, /*layered=*/true);
}

std::vector<CutCheck> color_class_cut_check(const Graph& g, const EdgeColoring& c) {
  validate_coloring(g, c);
  std::vector<CutCheck> out(c.num_colors);
  for (int col = 1; col <= c.num_colors; ++col) {
    CutCheck& check = out[col - 1];
    // connectivity of g minus the class
    std::vector<char> visited(g.vertex_count(), 0);
    std::vector<int> queue{0};
    visited[0] = 1;
    int reached = 1;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      int v = queue[head];
      const auto& nb = g.neighbors(v);
      const auto& ie = g.incident_edges(v);
      for (std::size_t i = 0; i < nb.size(); ++i) {
        if (c.color[ie[i]] == col || visited[nb[i]]) continue;
        visited[nb[i]] = 1;
        ++reached;
        queue.push_back(nb[i]);
      }
    }
    check.is_cut = reached < g.vertex_count();

    // induced matching: class edges pairwise non-adjacent and no g-edge
    // joins endpoints of two distinct class edges
    check.induced_matching = true;
    std::vector<int> owner(g.vertex_count(), -1);
    for (int e = 0; e < g.edge_count() && check.induced_matching; ++e) {
      if (c.color[e] != col) continue;
      auto [u, v] = g.edge(e);
      if (owner[u] >= 0 || owner[v] >= 0) check.induced_matching = false;
      owner[u] = owner[v] = e;
    }
    for (int e = 0; e < g.edge_count() && check.induced_matching; ++e) {
      auto [u, v] = g.edge(e);
      if (owner[u] >= 0 && owner[v] >= 0 && owner[u] != owner[v])
        check.induced_matching = false;
    }
  }
  return out;
}

}  // namespace hcube
