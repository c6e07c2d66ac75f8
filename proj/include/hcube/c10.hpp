#ifndef HCUBE_C10_HPP
#define HCUBE_C10_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hcube/cube.hpp"

namespace hcube {

inline constexpr std::uint64_t kDefaultCoverSeed = 0x9e3779b97f4a7c15ull;

/// Permutations of [n] such that every ordered triple (a, {b,c}) has some
/// member placing a before both b and c.
struct PermutationCover {
  int n = 0;
  std::vector<Permutation> perms;
};

/// Greedy cover: each round scores a fixed-seed pool of 64 random candidates
/// (plus identity and reversal in round one) and keeps the best.
PermutationCover build_cover(int n, std::uint64_t seed = kDefaultCoverSeed);

bool verify_cover(const PermutationCover& cover);

/// Exact minimum cover size by exhaustive search; practical for n <= 4.
int exact_min_cover_size(int n);

/// Combined color of an edge: layer-parity bit plus one prefix color per
/// cover permutation, packed as g0 + 2 * sum 3^i * c_i.
using CombinedColorCode = std::uint32_t;

struct CombinedColoring {
  int n = 0;
  int num_perms = 0;
  std::vector<CombinedColorCode> code;          // per edge id of Q_n
  std::vector<std::vector<int>> prefix_value;   // [perm][edge]
  std::vector<int> parity;                      // g0 per edge

  std::int64_t palette_bound() const;           // 2 * 3^num_perms
};

CombinedColoring combined_coloring(const HypercubeGraph& q,
                                   const PermutationCover& cover);

struct LargestClassResult {
  std::vector<int> edges;
  CombinedColorCode code = 0;
};
LargestClassResult largest_class(const HypercubeGraph& q, const CombinedColoring& col);

enum class TenCycleKind { H1, H2, H3, H4, H5, NotSingleLayer };

struct TenCycleClass {
  TenCycleKind kind;
  std::vector<int> star_positions;  // the 5 directions, ascending (single-layer)
  /// letter_of[i] in 0..4 (a..e) for star_positions[i]; meaningful for H1..H5.
  std::array<int, 5> letter_of{};
};

/// Classifies a 10-cycle of Q_n (vertex masks, consecutive adjacent) against
/// the five single-layer hypergraph shapes, up to relabeling. Throws on
/// malformed cycles.
TenCycleClass classify_10cycle(const HypercubeGraph& q,
                               const std::vector<VertexMask>& cycle);

struct MonoC10Report {
  bool ok = true;
  std::uint64_t cycles = 0;
  std::uint64_t single_layer = 0;
  std::array<std::uint64_t, 5> kind_counts{};  // H1..H5
  std::string failure;
  std::vector<VertexMask> witness_cycle;
};

/// Enumerates every 10-cycle of Q_n; asserts none is monochromatic under the
/// combined coloring, that single-layer cycles classify into H1..H5, that
/// H1-H3 cycles are non-constant under every cover permutation, and that each
/// H4 cycle is broken by a permutation putting its 'c' before 'b' and 'e'.
MonoC10Report verify_no_mono_c10(const HypercubeGraph& q,
                                 const PermutationCover& cover,
                                 const CombinedColoring& col);

/// The four tabulated 10-cycles (star strings over five coordinates); they
/// classify to H1..H4 in order.
const std::vector<std::vector<std::string>>& tabulated_h_cycles();
std::string render_h_cycle_table();

/// Vertex walk of a cycle given by consecutive star edges.
std::vector<VertexMask> cycle_from_star_strings(const std::vector<std::string>& edges);

}  // namespace hcube

#endif
