#ifndef HCUBE_COLORING_HPP
#define HCUBE_COLORING_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "hcube/graph.hpp"

namespace hcube {

/// Total edge coloring; color[e] parallels g.edges(), ids 1..num_colors with
/// no gaps.
struct EdgeColoring {
  std::vector<int> color;
  int num_colors = 0;
};

/// Validates totality and dense ids; throws otherwise.
void validate_coloring(const Graph& g, const EdgeColoring& c);

enum class NicenessVerdict { Nice, VeryNice, NotNice, NiceNotVeryNice };

struct OddColorCycleWitness {
  int color;
  std::vector<int> cycle_edges;  // edge ids of a cycle where `color` is odd
};
struct EvenPathWitness {
  std::vector<int> path_vertices;  // path where every color has even count
};
struct OddAvoidingPathWitness {
  int color;
  int edge1, edge2;                // distinct edges of that color
  std::vector<int> path_vertices;  // odd-length path between them, color-free
};

struct NicenessReport {
  NicenessVerdict verdict;
  std::optional<OddColorCycleWitness> odd_cycle;
  std::optional<EvenPathWitness> even_path;
  std::optional<OddAvoidingPathWitness> odd_avoiding_path;

  bool passed() const {
    return verdict == NicenessVerdict::Nice || verdict == NicenessVerdict::VeryNice;
  }
};

/// Nice = every cycle carries every color an even number of times (checked on
/// a cycle basis; parity is linear over the cycle space) and the per-color
/// parity signatures of tree paths from a root are distinct per component.
NicenessReport check_nice(const Graph& g, const EdgeColoring& c);

/// Very nice = nice and the constructive embedding stays in two consecutive
/// layers; on a nice-but-not-very-nice coloring the report carries an odd
/// color-avoiding path between two same-colored edges.
NicenessReport check_very_nice(const Graph& g, const EdgeColoring& c);

struct ColoringSearchResult {
  enum class Status { Found, NoneExists, BudgetExhausted };
  Status status;
  std::optional<EdgeColoring> coloring;
  std::uint64_t nodes = 0;
};

inline constexpr std::uint64_t kDefaultSearchBudget = 200'000'000;

/// Exhaustive search for a nice coloring with at most max_colors colors
/// (max_colors <= 0 means the default bound ||g||). Components are handled
/// independently and may share the palette.
ColoringSearchResult find_nice_coloring(const Graph& g, int max_colors = 0,
                                        std::uint64_t budget = kDefaultSearchBudget);

/// Exhaustive search for a very nice coloring; equivalent to deciding
/// layeredness.
ColoringSearchResult find_very_nice_coloring(const Graph& g,
                                             std::uint64_t budget = kDefaultSearchBudget);

struct CutCheck {
  bool is_cut = false;
  bool induced_matching = false;
};

/// Per color: does deleting the class disconnect the (connected) graph, and
/// is the class an induced matching.
std::vector<CutCheck> color_class_cut_check(const Graph& g, const EdgeColoring& c);

}  // namespace hcube

#endif
