#include "hcube/gallery.hpp"

#include <stdexcept>

#include "hcube/embedding.hpp"

namespace hcube {

ThetaGraph theta(const std::vector<int>& leg_lengths) {
  if (leg_lengths.size() < 2)
    throw std::invalid_argument("theta: need at least 2 legs");
  for (int len : leg_lengths)
    if (len < 2) throw std::invalid_argument("theta: legs must have length >= 2");

  ThetaGraph tg;
  std::vector<std::pair<int, int>> edges;
  int next = 2;
  for (int len : leg_lengths) {
    std::vector<int> leg{tg.pole_a};
    for (int i = 0; i < len - 1; ++i) leg.push_back(next++);
    leg.push_back(tg.pole_b);
    for (std::size_t i = 0; i + 1 < leg.size(); ++i)
      edges.emplace_back(leg[i], leg[i + 1]);
    tg.legs.push_back(std::move(leg));
  }
  tg.graph = Graph(next, std::move(edges));
  return tg;
}

Graph k23() { return theta({2, 2, 2}).graph; }

G8Graph g8() {
  ThetaGraph base = theta({4, 4, 4});
  G8Graph out;
  out.pole_a = base.pole_a;
  out.pole_b = base.pole_b;
  out.u = base.legs[0][1];        // neighbor of a on leg 1
  out.u_prime = base.legs[1][3];  // neighbor of a' on leg 2

  std::vector<std::pair<int, int>> edges = base.graph.edges();
  int next = base.graph.vertex_count();
  int prev = out.u;
  for (int i = 0; i < 3; ++i) {
    edges.emplace_back(prev, next);
    prev = next++;
  }
  edges.emplace_back(prev, out.u_prime);
  out.graph = Graph(next, std::move(edges));
  return out;
}

EdgeColoring theta_recipe_coloring(const ThetaGraph& tg) {
  const int t = static_cast<int>(tg.legs.size());
  const int m = static_cast<int>(tg.legs[0].size()) - 1;
  for (const auto& leg : tg.legs)
    if (static_cast<int>(leg.size()) - 1 != m)
      throw std::invalid_argument("theta_recipe_coloring: legs must have equal length");
  if (m < 3)
    throw std::invalid_argument("theta_recipe_coloring: legs must have length >= 3");

  EdgeColoring c;
  c.color.assign(tg.graph.edge_count(), 0);
  for (int leg = 0; leg < t; ++leg) {
    const auto& vs = tg.legs[leg];
    for (int d = 0; d < m; ++d) {
      int e = tg.graph.find_edge(vs[d], vs[d + 1]);
      if (d == 0 || d == m - 1)
        c.color[e] = leg + 1;  // pole-incident edges take the leg index
      else
        c.color[e] = t + d;  // distance class from pole a
    }
  }
  c.num_colors = t + m - 2;
  return c;
}

PoleDistanceAudit theta_pole_distance_audit(int t, int m, std::uint64_t budget) {
  PoleDistanceAudit audit;
  audit.applicable = t > (m + 1) / 2;
  ThetaGraph tg = theta(std::vector<int>(t, m));
  LayeredResult r = decide_layered(tg.graph, budget);
  if (r.status == LayeredResult::Status::BudgetExhausted) {
    audit.budget_exhausted = true;
    audit.ok = false;
    return audit;
  }
  audit.layered = r.status == LayeredResult::Status::Layered;
  if (audit.layered) {
    const auto& emb = *r.embedding;
    audit.pole_distance = emb.image[tg.pole_a].hamming(emb.image[tg.pole_b]);
    if (audit.applicable) audit.ok = audit.pole_distance < m;
  }
  return audit;
}

}  // namespace hcube
