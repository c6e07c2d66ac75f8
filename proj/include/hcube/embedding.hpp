#ifndef HCUBE_EMBEDDING_HPP
#define HCUBE_EMBEDDING_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hcube/coloring.hpp"
#include "hcube/cube.hpp"
#include "hcube/graph.hpp"

namespace hcube {

/// Injective map of graph vertices into layers layer-1 and layer of Q_N.
struct LayerEmbedding {
  int ambient_dimension = 0;  // N
  int layer = 0;              // upper layer index k; images sit in V_{k-1} u V_k
  std::vector<HypercubeVertex> image;

  std::string to_json() const;
  static LayerEmbedding from_json(const std::string& text);
};

struct EmbeddingReport {
  bool ok = true;
  std::string violation;  // first violation, empty when ok
};

/// Checks injectivity, edges -> Hamming distance 1, and containment in the
/// two declared consecutive layers.
EmbeddingReport verify_layer_embedding(const Graph& g, const LayerEmbedding& emb);

/// The constructive embedding from a nice coloring: colors whose class has
/// odd distance to the root form the root image C-, and every edge flips the
/// coordinate of its color. Lands in two consecutive layers iff the coloring
/// is very nice. Throws if c is not nice or g is disconnected.
LayerEmbedding embed_from_very_nice(const Graph& g, const EdgeColoring& c, int root);

struct LayeredResult {
  enum class Status { Layered, NotLayered, BudgetExhausted };
  Status status;
  std::optional<LayerEmbedding> embedding;
  std::uint64_t nodes = 0;
};

/// Exhaustive backtracking over edge -> direction assignments with canonical
/// first-use ordering; disconnected inputs are decided per component and the
/// embeddings merged into a common pair of layers.
LayeredResult decide_layered(const Graph& g, std::uint64_t budget = kDefaultSearchBudget);

/// Color of each edge = direction of its image edge; throws on embeddings
/// that do not map every edge to a Hamming-distance-1 pair.
EdgeColoring direction_coloring(const Graph& g, const LayerEmbedding& emb);

struct PartiteCertificate {
  std::vector<std::vector<int>> parts;  // partition of [N]
  // For every upper-layer vertex: its image's one element per part.
  std::vector<std::pair<int, std::vector<int>>> transversals;
};

/// Certificate iff every upper-layer image meets each part exactly once;
/// otherwise nullopt with the reason in *why_not (if given).
std::optional<PartiteCertificate> check_partite(
    const LayerEmbedding& emb, const std::vector<std::vector<int>>& partition,
    std::string* why_not = nullptr);

// --- shared direction-assignment search engine ------------------------------

struct CubeSearchOutcome {
  enum class Status { Found, NoneExists, BudgetExhausted };
  Status status;
  int dims_used = 0;
  std::vector<BitVec> path_image;  // XOR-path image per vertex, root = empty
  BitVec root_image;               // layered mode: C-, otherwise empty
  std::uint64_t nodes = 0;
};

/// Backtracking search for an embedding of a connected graph into Q_max_dims
/// (layered: into two consecutive layers). Directions are introduced in
/// canonical first-use order; vertices are assigned in a cycle-closing DFS
/// order with Hamming-vs-graph-distance pruning.
CubeSearchOutcome search_cube_embedding(const Graph& g, int max_dims, bool layered,
                                        std::uint64_t budget);

}  // namespace hcube

#endif
