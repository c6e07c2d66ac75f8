#include "hcube/turan.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace hcube {

Pattern pattern_from_name(const std::string& name) {
  if (name == "C4") return CyclePattern{4};
  if (name == "C6") return CyclePattern{6};
  if (name == "C8") return CyclePattern{8};
  if (name == "C10") return CyclePattern{10};
  if (name == "C6-") return C6MinusPattern{};
  throw std::invalid_argument("unknown pattern '" + name +
                              "' (expected C4|C6|C6-|C8|C10)");
}

std::string pattern_name(const Pattern& p) {
  if (std::holds_alternative<C6MinusPattern>(p)) return "C6-";
  if (std::holds_alternative<ExplicitPattern>(p)) return "explicit";
  return "C" + std::to_string(std::get<CyclePattern>(p).length);
}

namespace {

std::vector<int> cycle_edge_ids(const HypercubeGraph& q, const std::vector<int>& cyc) {
  std::vector<int> ids;
  ids.reserve(cyc.size());
  for (std::size_t i = 0; i < cyc.size(); ++i) {
    int id = q.edge_id(static_cast<VertexMask>(cyc[i]),
                       static_cast<VertexMask>(cyc[(i + 1) % cyc.size()]));
    ids.push_back(id);
  }
  std::sort(ids.begin(), ids.end());
  return ids;
}

}  // namespace

std::vector<std::vector<int>> pattern_instances(const HypercubeGraph& q,
                                                const Pattern& p) {
  std::vector<std::vector<int>> out;
  if (const auto* cp = std::get_if<CyclePattern>(&p)) {
    for (const auto& cyc : cycles_of_length(q.graph, cp->length))
      out.push_back(cycle_edge_ids(q, cyc));
    std::sort(out.begin(), out.end());
    return out;
  }
  if (std::holds_alternative<C6MinusPattern>(p)) {
    std::set<std::vector<int>> seen;
    for (const auto& cyc : cycles_of_length(q.graph, 6)) {
      std::vector<int> ids = cycle_edge_ids(q, cyc);
      for (int drop = 0; drop < 6; ++drop) {
        std::vector<int> sub;
        for (int i = 0; i < 6; ++i)
          if (i != drop) sub.push_back(ids[i]);
        seen.insert(std::move(sub));
      }
    }
    return {seen.begin(), seen.end()};
  }
  out = std::get<ExplicitPattern>(p).instances;
  for (auto& inst : out) std::sort(inst.begin(), inst.end());
  std::sort(out.begin(), out.end());
  return out;
}

bool contains_instance(const std::vector<std::vector<int>>& instances,
                       const std::vector<char>& edge_present) {
  for (const auto& inst : instances) {
    bool all = true;
    for (int e : inst)
      if (!edge_present[e]) {
        all = false;
        break;
      }
    if (all) return true;
  }
  return false;
}

namespace {

/// Automorphisms of Q_n as edge-id permutations (coordinate permutations
/// composed with translations). Used only for shallow symmetry pruning.
std::vector<std::vector<int>> edge_automorphisms(const HypercubeGraph& q) {
  const int n = q.n;
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<int>> maps;
  const int edge_count = q.graph.edge_count();
  do {
    for (VertexMask tr = 0; tr < (VertexMask{1} << n); ++tr) {
      std::vector<int> emap(edge_count);
      for (int e = 0; e < edge_count; ++e) {
        auto [u, v] = q.graph.edge(e);
        auto apply = [&](VertexMask m) {
          VertexMask r = 0;
          for (int i = 0; i < n; ++i)
            if (m >> i & 1) r |= VertexMask{1} << perm[i];
          return r ^ tr;
        };
        emap[e] = q.edge_id(apply(static_cast<VertexMask>(u)),
                            apply(static_cast<VertexMask>(v)));
      }
      maps.push_back(std::move(emap));
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return maps;
}

struct HittingSearch {
  const std::vector<std::vector<int>>& instances;
  std::vector<std::vector<int>> member_of;  // edge -> instance ids
  std::vector<int> hit_count;               // per instance: removed edges inside
  std::vector<char> removed;
  int removed_count = 0;
  int best = 0;                   // smallest complete hitting set found
  std::vector<int> best_removed;  // its edges
  std::uint64_t budget;
  std::uint64_t nodes = 0;
  bool budget_hit = false;
  const std::vector<std::vector<int>>* autos = nullptr;
  std::set<std::vector<int>> seen_shallow;

  HittingSearch(const std::vector<std::vector<int>>& inst, int edge_count,
                std::uint64_t budget_limit)
      : instances(inst), budget(budget_limit) {
    member_of.assign(edge_count, {});
    for (std::size_t i = 0; i < instances.size(); ++i)
      for (int e : instances[i]) member_of[e].push_back(static_cast<int>(i));
    hit_count.assign(instances.size(), 0);
    removed.assign(edge_count, 0);
  }

  /// Greedy cover: always remove the edge hitting the most live instances.
  std::vector<int> greedy() {
    std::vector<char> live(instances.size(), 1);
    std::size_t remaining = instances.size();
    std::vector<int> picked;
    while (remaining > 0) {
      int best_edge = -1, best_gain = -1;
      for (std::size_t e = 0; e < member_of.size(); ++e) {
        int gain = 0;
        for (int i : member_of[e]) gain += live[i];
        if (gain > best_gain) {
          best_gain = gain;
          best_edge = static_cast<int>(e);
        }
      }
      picked.push_back(best_edge);
      for (int i : member_of[best_edge]) {
        if (live[i]) --remaining;
        live[i] = 0;
      }
    }
    return picked;
  }

  /// Lower bound: greedy packing of pairwise edge-disjoint unhit instances.
  int packing_bound() const {
    std::vector<char> used(removed.size(), 0);
    int bound = 0;
    for (const auto& inst : instances) {
      bool unhit = true, disjoint = true;
      for (int e : inst) {
        if (removed[e]) {
          unhit = false;
          break;
        }
        if (used[e]) disjoint = false;
      }
      if (!unhit || !disjoint) continue;
      ++bound;
      for (int e : inst) used[e] = 1;
    }
    return bound;
  }

  int pick_unhit() const {
    for (std::size_t i = 0; i < instances.size(); ++i)
      if (hit_count[i] == 0) return static_cast<int>(i);
    return -1;
  }

  void mark(int e, int delta) {
    removed[e] = delta > 0;
    removed_count += delta;
    for (int i : member_of[e]) hit_count[i] += delta;
  }

  bool shallow_seen(int depth) {
    if (!autos || depth > 2) return false;
    std::vector<int> ids;
    for (std::size_t e = 0; e < removed.size(); ++e)
      if (removed[e]) ids.push_back(static_cast<int>(e));
    std::vector<int> canon = ids;
    std::vector<int> mapped(ids.size());
    for (const auto& a : *autos) {
      for (std::size_t i = 0; i < ids.size(); ++i) mapped[i] = a[ids[i]];
      std::sort(mapped.begin(), mapped.end());
      if (mapped < canon) canon = mapped;
    }
    return !seen_shallow.insert(canon).second;
  }

  void run(int depth) {
    if (budget_hit) return;
    if (++nodes > budget) {
      budget_hit = true;
      return;
    }
    if (removed_count + packing_bound() >= best) return;
    int inst = pick_unhit();
    if (inst < 0) {
      best = removed_count;  // improvement guaranteed by the bound test
      best_removed.clear();
      for (std::size_t e = 0; e < removed.size(); ++e)
        if (removed[e]) best_removed.push_back(static_cast<int>(e));
      return;
    }
    for (int e : instances[inst]) {
      mark(e, +1);
      if (!shallow_seen(depth + 1)) run(depth + 1);
      mark(e, -1);
      if (budget_hit) return;
    }
  }
};

}  // namespace

ExResult ex_exact(int n, const Pattern& p, std::uint64_t budget) {
  if (n < 0 || n > 6)
    throw std::invalid_argument("ex_exact: supported for 0 <= n <= 6");
  HypercubeGraph q = HypercubeGraph::build(n);
  const int edge_count = q.graph.edge_count();
  auto instances = pattern_instances(q, p);

  ExResult res;
  if (instances.empty()) {
    res.exact = true;
    res.lower = res.upper = edge_count;
    res.witness_edges.resize(edge_count);
    std::iota(res.witness_edges.begin(), res.witness_edges.end(), 0);
    return res;
  }

  HittingSearch search(instances, edge_count, budget);
  auto greedy = search.greedy();
  search.best = static_cast<int>(greedy.size()) + 1;
  search.best_removed = greedy;
  std::vector<std::vector<int>> autos;
  if (n <= 4) {
    autos = edge_automorphisms(q);
    search.autos = &autos;
  }
  int root_bound = search.packing_bound();
  search.run(0);
  res.nodes = search.nodes;

  if (search.budget_hit) {
    res.exact = false;
    res.lower = edge_count - static_cast<int>(search.best_removed.size());
    res.upper = edge_count - root_bound;
  } else {
    res.exact = true;
    res.lower = res.upper = edge_count - search.best;
  }
  std::vector<char> keep(edge_count, 1);
  for (int e : search.best_removed) keep[e] = 0;
  for (int e = 0; e < edge_count; ++e)
    if (keep[e]) res.witness_edges.push_back(e);
  if (contains_instance(instances, keep))
    throw std::logic_error("ex_exact: witness re-verification failed");
  return res;
}

std::vector<int> alternating_layers(const HypercubeGraph& q, LayerParity parity) {
  std::vector<int> out;
  const int want = parity == LayerParity::Even ? 0 : 1;
  for (int e = 0; e < q.graph.edge_count(); ++e)
    if (q.edge_layer(e) % 2 == want) out.push_back(e);
  return out;
}

Graph edges_subgraph(const HypercubeGraph& q, const std::vector<int>& edge_ids) {
  std::vector<std::pair<int, int>> edges;
  edges.reserve(edge_ids.size());
  for (int e : edge_ids) edges.push_back(q.graph.edge(e));
  return Graph(q.graph.vertex_count(), std::move(edges));
}

PrefixClassResult c6minus_to_c10(const HypercubeGraph& q,
                                 const std::vector<int>& edge_ids) {
  std::vector<char> present(q.graph.edge_count(), 0);
  for (int e : edge_ids) present[e] = 1;
  auto instances = pattern_instances(q, C6MinusPattern{});
  if (contains_instance(instances, present))
    throw std::invalid_argument("c6minus_to_c10: input subgraph contains a C6-");

  std::map<int, std::vector<int>> classes;
  for (int e : edge_ids) classes[prefix_color(q.star(e))].push_back(e);
  PrefixClassResult res;
  std::size_t best = 0;
  for (const auto& [color, edges] : classes)
    if (edges.size() > best) {
      best = edges.size();
      res.color = color;
      res.class_edges = edges;
    }

  if (q.n <= 6) {
    Graph sub = edges_subgraph(q, res.class_edges);
    res.verified_c10_free = cycles_of_length(sub, 10).empty();
    if (!res.verified_c10_free)
      throw std::logic_error("c6minus_to_c10: largest prefix class contains a C10");
  }
  return res;
}

}  // namespace hcube
