#ifndef HCUBE_TEST_UTIL_HPP
#define HCUBE_TEST_UTIL_HPP

// Shared test-side oracles. These deliberately avoid the library's search and
// enumeration code paths so they can serve as independent cross-checks.

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "hcube/coloring.hpp"
#include "hcube/cube.hpp"
#include "hcube/graph.hpp"

namespace hcube::testutil {

/// All simple cycles of length exactly L, canonicalized, by brute force over
/// vertex subsets and orderings. Exponential; fine for tiny graphs.
inline std::set<std::vector<int>> cycles_by_permutation(const Graph& g, int L) {
  std::set<std::vector<int>> out;
  const int n = g.vertex_count();
  std::vector<int> verts(n);
  std::iota(verts.begin(), verts.end(), 0);
  std::vector<int> subset;
  std::function<void(int)> choose = [&](int from) {
    if (static_cast<int>(subset.size()) == L) {
      // enumerate cyclic orders: first = min, second < last
      std::vector<int> rest(subset.begin() + 1, subset.end());
      std::sort(rest.begin(), rest.end());
      do {
        if (rest.front() > rest.back()) continue;
        std::vector<int> cyc{subset[0]};
        cyc.insert(cyc.end(), rest.begin(), rest.end());
        bool ok = true;
        for (int i = 0; i < L && ok; ++i)
          ok = g.adjacent(cyc[i], cyc[(i + 1) % L]);
        if (ok) out.insert(cyc);
      } while (std::next_permutation(rest.begin(), rest.end()));
      return;
    }
    for (int i = from; i < n; ++i) {
      subset.push_back(verts[i]);
      choose(i + 1);
      subset.pop_back();
    }
  };
  choose(0);
  return out;
}

/// GF(2) membership of a cycle (edge set) in the span of the given cycles.
inline bool in_gf2_span(const std::vector<std::vector<int>>& basis,
                        const std::vector<int>& target, int edge_count) {
  const int words = (edge_count + 63) / 64;
  auto to_bits = [&](const std::vector<int>& edges) {
    std::vector<std::uint64_t> bits(words, 0);
    for (int e : edges) bits[e / 64] ^= std::uint64_t{1} << (e % 64);
    return bits;
  };
  std::vector<std::vector<std::uint64_t>> rows;
  for (const auto& b : basis) rows.push_back(to_bits(b));
  std::vector<std::uint64_t> t = to_bits(target);
  // Gaussian elimination over the rows.
  std::vector<int> pivot_of_row;
  for (auto& row : rows) {
    for (std::size_t r = 0; r < pivot_of_row.size(); ++r) {
      int p = pivot_of_row[r];
      if (row[p / 64] >> (p % 64) & 1)
        for (int w = 0; w < words; ++w) row[w] ^= rows[r][w];
    }
    int pivot = -1;
    for (int e = 0; e < edge_count && pivot < 0; ++e)
      if (row[e / 64] >> (e % 64) & 1) pivot = e;
    if (pivot >= 0) pivot_of_row.push_back(pivot);
    // rows with no pivot stay zero and are skipped implicitly
  }
  // reduce target
  for (std::size_t r = 0; r < rows.size() && r < pivot_of_row.size(); ++r) {
    int p = pivot_of_row[r];
    if (t[p / 64] >> (p % 64) & 1)
      for (int w = 0; w < words; ++w) t[w] ^= rows[r][w];
  }
  for (int w = 0; w < words; ++w)
    if (t[w]) return false;
  return true;
}

/// Niceness by definition: every simple cycle even in every color, every
/// simple path has an odd color. Brute force; tiny graphs only.
inline bool brute_force_nice(const Graph& g, const EdgeColoring& c) {
  // cycles via DFS over simple closed walks
  const int n = g.vertex_count();
  for (int L = 3; L <= n; ++L)
    for (const auto& cyc : cycles_by_permutation(g, L)) {
      std::vector<int> mult(c.num_colors + 1, 0);
      for (int i = 0; i < L; ++i)
        mult[c.color[g.find_edge(cyc[i], cyc[(i + 1) % L])]] ^= 1;
      for (int col = 1; col <= c.num_colors; ++col)
        if (mult[col]) return false;
    }
  // paths: DFS from every vertex
  bool ok = true;
  std::vector<int> path;
  std::vector<char> on_path(n, 0);
  std::vector<int> mult(c.num_colors + 1, 0);
  std::function<void(int)> dfs = [&](int v) {
    if (!ok) return;
    if (path.size() >= 2) {
      bool has_odd = false;
      for (int col = 1; col <= c.num_colors && !has_odd; ++col)
        has_odd = mult[col] % 2 == 1;
      if (!has_odd) {
        ok = false;
        return;
      }
    }
    const auto& nb = g.neighbors(v);
    const auto& ie = g.incident_edges(v);
    for (std::size_t i = 0; i < nb.size(); ++i) {
      if (on_path[nb[i]]) continue;
      on_path[nb[i]] = 1;
      path.push_back(nb[i]);
      mult[c.color[ie[i]]] += 1;
      dfs(nb[i]);
      mult[c.color[ie[i]]] -= 1;
      path.pop_back();
      on_path[nb[i]] = 0;
      if (!ok) return;
    }
  };
  for (int s = 0; s < n && ok; ++s) {
    path.assign(1, s);
    on_path[s] = 1;
    dfs(s);
    on_path[s] = 0;
  }
  return ok;
}

/// Very-niceness by definition, on top of brute_force_nice: for every pair of
/// same-colored edges, every simple path between endpoints avoiding that
/// color has even length.
inline bool brute_force_very_nice(const Graph& g, const EdgeColoring& c) {
  if (!brute_force_nice(g, c)) return false;
  const int n = g.vertex_count();
  for (int col = 1; col <= c.num_colors; ++col) {
    std::vector<int> class_edges;
    for (int e = 0; e < g.edge_count(); ++e)
      if (c.color[e] == col) class_edges.push_back(e);
    if (class_edges.size() < 2) continue;
    std::vector<int> owner_count(n, 0);
    for (int e : class_edges) {
      auto [u, v] = g.edge(e);
      owner_count[u]++;
      owner_count[v]++;
    }
    for (std::size_t i = 0; i < class_edges.size(); ++i)
      for (std::size_t j = 0; j < class_edges.size(); ++j) {
        if (i == j) continue;
        auto [u1, v1] = g.edge(class_edges[i]);
        auto [u2, v2] = g.edge(class_edges[j]);
        for (int src : {u1, v1})
          for (int dst : {u2, v2}) {
            // DFS all simple paths src -> dst avoiding the color
            bool bad = false;
            std::vector<char> on_path(n, 0);
            std::function<void(int, int)> dfs = [&](int v, int len) {
              if (bad) return;
              if (v == dst) {
                if (len % 2 == 1) bad = true;
                return;
              }
              const auto& nb = g.neighbors(v);
              const auto& ie = g.incident_edges(v);
              for (std::size_t x = 0; x < nb.size(); ++x) {
                if (c.color[ie[x]] == col || on_path[nb[x]]) continue;
                on_path[nb[x]] = 1;
                dfs(nb[x], len + 1);
                on_path[nb[x]] = 0;
                if (bad) return;
              }
            };
            on_path[src] = 1;
            dfs(src, 0);
            if (bad) return false;
          }
      }
  }
  return true;
}

/// Random connected subgraph of a random edge layer of Q_n; layered by
/// construction. Returns the abstract graph.
inline Graph random_layered_graph(std::mt19937_64& rng, int max_n = 6,
                                  int max_vertices = 12) {
  for (;;) {
    std::uniform_int_distribution<int> nd(2, max_n);
    int n = nd(rng);
    std::uniform_int_distribution<int> kd(1, n);
    int k = kd(rng);
    EdgeLayerGraph layer = edge_layer_graph(n, k);
    if (layer.graph.edge_count() == 0) continue;
    // random connected edge-induced subgraph: grow from a random edge
    std::uniform_int_distribution<int> ed(0, layer.graph.edge_count() - 1);
    std::set<int> edges{ed(rng)};
    std::set<int> verts{layer.graph.edge(*edges.begin()).first,
                        layer.graph.edge(*edges.begin()).second};
    std::uniform_int_distribution<int> grow(3, max_vertices);
    int target = grow(rng);
    for (int step = 0; step < 4 * max_vertices; ++step) {
      if (static_cast<int>(verts.size()) >= target) break;
      std::vector<int> frontier;
      for (int v : verts)
        for (std::size_t i = 0; i < layer.graph.neighbors(v).size(); ++i)
          if (!edges.count(layer.graph.incident_edges(v)[i]))
            frontier.push_back(layer.graph.incident_edges(v)[i]);
      if (frontier.empty()) break;
      std::uniform_int_distribution<std::size_t> fd(0, frontier.size() - 1);
      int e = frontier[fd(rng)];
      edges.insert(e);
      verts.insert(layer.graph.edge(e).first);
      verts.insert(layer.graph.edge(e).second);
    }
    // relabel to 0..|verts|-1
    std::vector<int> vlist(verts.begin(), verts.end());
    std::vector<int> new_of(layer.graph.vertex_count(), -1);
    for (std::size_t i = 0; i < vlist.size(); ++i) new_of[vlist[i]] = static_cast<int>(i);
    std::vector<std::pair<int, int>> es;
    for (int e : edges)
      es.emplace_back(new_of[layer.graph.edge(e).first],
                      new_of[layer.graph.edge(e).second]);
    return Graph(static_cast<int>(vlist.size()), std::move(es));
  }
}

inline std::vector<int> random_relabeling(int n, std::mt19937_64& rng) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return perm;
}

}  // namespace hcube::testutil

#endif
