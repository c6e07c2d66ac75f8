#ifndef HCUBE_TURAN_HPP
#define HCUBE_TURAN_HPP

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "hcube/cube.hpp"
#include "hcube/graph.hpp"

namespace hcube {

struct CyclePattern {
  int length;
};
/// A 5-edge subgraph of a 6-cycle of Q_n (not an arbitrary 5-path).
struct C6MinusPattern {};
struct ExplicitPattern {
  std::vector<std::vector<int>> instances;  // edge-id sets
};
using Pattern = std::variant<CyclePattern, C6MinusPattern, ExplicitPattern>;

Pattern pattern_from_name(const std::string& name);  // C4|C6|C6-|C8|C10
std::string pattern_name(const Pattern& p);

/// All instances of the pattern in Q_n as sorted edge-id sets, deduplicated.
std::vector<std::vector<int>> pattern_instances(const HypercubeGraph& q,
                                                const Pattern& p);

bool contains_instance(const std::vector<std::vector<int>>& instances,
                       const std::vector<char>& edge_present);

struct ExResult {
  bool exact = false;
  std::int64_t lower = 0, upper = 0;  // bounds on ex; equal when exact
  std::vector<int> witness_edges;     // pattern-free subgraph achieving lower
  std::uint64_t nodes = 0;
};

/// Exact maximum edge count of a pattern-free subgraph of Q_n via
/// branch-and-bound on the complementary minimum hitting set. Exactness is
/// guaranteed cheap for n <= 4; on budget exhaustion certified bounds are
/// returned instead.
ExResult ex_exact(int n, const Pattern& p, std::uint64_t budget = 500'000'000);

enum class LayerParity { Even, Odd };

/// Edge ids of the union of all edge layers of the given parity in Q_n.
std::vector<int> alternating_layers(const HypercubeGraph& q, LayerParity parity);

struct PrefixClassResult {
  std::vector<int> class_edges;  // largest prefix-color class
  int color = 0;
  bool verified_c10_free = false;  // exhaustive check, run for n <= 6
};

/// The largest prefix-color class of a C6minus-free subgraph; at least a
/// third of the edges, and C10-free. Throws if the input is not C6minus-free.
PrefixClassResult c6minus_to_c10(const HypercubeGraph& q,
                                 const std::vector<int>& edge_ids);

/// Subgraph of Q_n on the full vertex set with the given edges.
Graph edges_subgraph(const HypercubeGraph& q, const std::vector<int>& edge_ids);

}  // namespace hcube

#endif
