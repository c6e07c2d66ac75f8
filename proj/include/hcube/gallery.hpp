#ifndef HCUBE_GALLERY_HPP
#define HCUBE_GALLERY_HPP

#include <cstdint>
#include <vector>

#include "hcube/coloring.hpp"
#include "hcube/graph.hpp"

namespace hcube {

/// Theta graph: internally disjoint paths ("legs") between two poles.
/// Vertex 0 and 1 are the poles; legs[i] lists the vertices of leg i in order,
/// poles included.
struct ThetaGraph {
  Graph graph;
  int pole_a = 0, pole_b = 1;
  std::vector<std::vector<int>> legs;
};

/// Legs of the given lengths (each >= 2, at least 2 legs).
ThetaGraph theta(const std::vector<int>& leg_lengths);

Graph k23();

/// G8: theta(4,4,4) with u next to pole a on leg 1 and u' next to pole a' on
/// leg 2, joined by an extra internally disjoint u,u'-path of length 4.
/// 14 vertices, 16 edges, girth 8, cubical, not layered.
struct G8Graph {
  Graph graph;
  int pole_a = 0, pole_b = 1;
  int u = 0, u_prime = 0;
};
G8Graph g8();

/// The nice coloring recipe for a theta graph with t legs of equal length
/// m >= 3: pole-incident edges take the leg index, interior edges at distance
/// d from pole a share color t + d.
EdgeColoring theta_recipe_coloring(const ThetaGraph& tg);

struct PoleDistanceAudit {
  bool applicable = false;  // t > ceil(m/2)
  bool layered = false;
  bool budget_exhausted = false;
  int pole_distance = -1;  // Hamming distance of the pole images when layered
  bool ok = true;          // pole_distance < m whenever layered
};

/// If a theta graph with t legs of length m (t > ceil(m/2)) embeds in a
/// layer, the poles' images are at Hamming distance < m.
PoleDistanceAudit theta_pole_distance_audit(int t, int m,
                                            std::uint64_t budget = kDefaultSearchBudget);

}  // namespace hcube

#endif
