#ifndef HCUBE_CUBE_HPP
#define HCUBE_CUBE_HPP

#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "hcube/bits.hpp"
#include "hcube/graph.hpp"

namespace hcube {

/// A vertex of Q_n: a subset of [n] with 1-based coordinates and a fixed
/// dimension. Operations across mismatched dimensions throw.
class HypercubeVertex {
 public:
  explicit HypercubeVertex(int dimension);
  HypercubeVertex(int dimension, std::initializer_list<int> elements);
  HypercubeVertex(int dimension, const std::vector<int>& elements);
  HypercubeVertex(int dimension, BitVec bits);

  /// Parse a fixed-length {0,1} string, leftmost character = coordinate 1.
  static HypercubeVertex from_binary(std::string_view s);

  int dimension() const { return dim_; }
  const BitVec& bits() const { return bits_; }
  int layer() const { return bits_.count(); }

  bool contains(int i) const;
  HypercubeVertex with(int i) const;
  HypercubeVertex without(int i) const;
  HypercubeVertex flipped(int i) const;

  std::vector<int> elements() const;
  std::string to_binary() const;
  std::string to_set_string() const;  // "{1,2,4}"

  int hamming(const HypercubeVertex& other) const;
  bool adjacent(const HypercubeVertex& other) const { return hamming(other) == 1; }

  friend bool operator==(const HypercubeVertex&, const HypercubeVertex&) = default;
  friend std::strong_ordering operator<=>(const HypercubeVertex&,
                                          const HypercubeVertex&) = default;

 private:
  int dim_;
  BitVec bits_;
};

/// An edge of Q_n in star representation: the lower endpoint plus the star
/// (direction) position, which must not lie in the lower endpoint.
class StarEdge {
 public:
  StarEdge(HypercubeVertex lower, int direction);

  /// Inverse of star_string(). Throws on malformed input, naming the position.
  static StarEdge parse(std::string_view s);

  int dimension() const { return lower_.dimension(); }
  const HypercubeVertex& lower() const { return lower_; }
  HypercubeVertex upper() const { return lower_.with(direction_); }
  int direction() const { return direction_; }

  std::string star_string() const;

  friend bool operator==(const StarEdge&, const StarEdge&) = default;

 private:
  HypercubeVertex lower_;
  int direction_;
};

/// Permutation of [n]; p(i) is 1-based.
class Permutation {
 public:
  static Permutation identity(int n);
  static Permutation reversal(int n);
  /// images[i-1] = p(i); validates bijectivity.
  explicit Permutation(std::vector<int> images);

  int size() const { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_[i - 1]; }
  int inverse(int value) const { return inv_[value - 1]; }
  const std::vector<int>& images() const { return images_; }

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_, inv_;
};

/// Prefix coloring: (#1s before the star - #1s after the star) mod 3.
int prefix_color(const StarEdge& e);
/// Prefix coloring of the representation of e with respect to pi,
/// i.e. of the string (x_{pi(1)}, ..., x_{pi(n)}).
int prefix_color_permuted(const StarEdge& e, const Permutation& pi);

// --- materialized hypercubes ------------------------------------------------

using VertexMask = std::uint32_t;

inline int mask_layer(VertexMask m) { return std::popcount(m); }

/// Q_n as a Graph whose vertex ids are subset masks (bit i-1 = coordinate i),
/// with edge <-> star-representation indexing.
struct HypercubeGraph {
  int n = 0;
  Graph graph;

  static HypercubeGraph build(int n);

  int edge_id(VertexMask u, VertexMask v) const;        // -1 if not an edge
  StarEdge star(int edge_id) const;
  int direction(int edge_id) const;
  VertexMask lower_mask(int edge_id) const;
  /// Edge layer index: |upper endpoint| of the edge.
  int edge_layer(int edge_id) const;

 private:
  std::vector<int> edge_lookup_;  // (mask * n + dir-1) -> edge id
};

Graph hypercube_graph(int n);

/// The k-th edge layer of Q_n: subgraph induced by vertex layers k-1 and k.
/// Vertex labels carry the binary strings; `masks` maps graph ids back to Q_n.
struct EdgeLayerGraph {
  int n = 0, k = 0;
  Graph graph;
  std::vector<VertexMask> masks;
};
EdgeLayerGraph edge_layer_graph(int n, int k);

}  // namespace hcube

#endif
