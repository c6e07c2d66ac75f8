#ifndef HCUBE_SUBDIVISION_HPP
#define HCUBE_SUBDIVISION_HPP

#include <string>
#include <utility>
#include <vector>

#include "hcube/embedding.hpp"
#include "hcube/graph.hpp"

namespace hcube {

/// T_k(base): k new vertices inserted in every edge. Branch vertices keep
/// their base ids; the vertices of the path for base edge e are listed in
/// paths[e] as [x, z_1, ..., z_k, y].
struct SubdividedGraph {
  Graph graph;
  Graph base;
  int insertions = 0;
  std::vector<std::vector<int>> paths;
};

SubdividedGraph subdivide(const Graph& base, int k);

Graph complete_graph(int t);
Graph complete_bipartite_graph(int s, int t);

struct SubdivisionEmbedding {
  SubdividedGraph subdivision;
  LayerEmbedding embedding;
  /// Declared partite parts (coordinate sets); empty when the construction
  /// does not come with a partite representation.
  std::vector<std::vector<int>> partite_parts;
};

/// Layered embedding of T_{2k+1}(K_t), t >= 1, k >= 0. For k >= 1 the upper
/// images form a (k+1)-partite hypergraph with part sizes (t, ..., t, C(t,2)).
SubdivisionEmbedding embed_odd_subdivision_complete(int t, int k);

/// Layered embedding of T_{2k}(K_{t,t}), t >= 1, k >= 1 (cases k=1, k=2 and
/// k>=3 differ). For even k >= 4 the parts have sizes at most
/// (2t, k, ..., k, k*t^2).
SubdivisionEmbedding embed_even_subdivision_bipartite(int t, int k);

// --- indicator-vector tables -------------------------------------------------

struct TableColumn {
  int k;
  std::vector<std::pair<std::string, std::string>> rows;  // (label, bits)
};

/// Transcribed tabulated columns: table 1 covers k = 1,2,3 of the odd-complete
/// family restricted to (b_e, x_1..x_k, y_1..y_k); table 2 covers k = 3,4,5 of
/// the even-bipartite family restricted to (a, b, c, s_e^1..s_e^{k-1}).
const std::vector<TableColumn>& table_columns(int table);

std::string render_indicator_table(int table);

struct TableCheckResult {
  bool ok = true;
  std::vector<std::string> mismatches;
};

/// Compares the programmatic construction, restricted to the tabulated
/// coordinates, against the transcribed table column for this k.
TableCheckResult table_fidelity_check(int table, int k);

}  // namespace hcube

#endif
