#ifndef HCUBE_DISTANCE_EMBEDDING_HPP
#define HCUBE_DISTANCE_EMBEDDING_HPP

#include <string>
#include <vector>

#include "hcube/cube.hpp"

namespace hcube {

/// Injective map of V(Q_n) into Q_N sending adjacent vertices to pairs at
/// exact Hamming distance `distance`; images sit in one layer (even distance)
/// or two consecutive layers (odd distance).
struct FixedDistanceEmbedding {
  int source_dimension = 0;  // n
  int target_dimension = 0;  // N
  int distance = 0;          // m
  std::vector<HypercubeVertex> image;  // indexed by source vertex mask
};

/// Distance 2k+2; block i of length 2k+2 alternates 0101.. or 1010.. by v[i].
/// Single-layer image.
FixedDistanceEmbedding embed_fk(int n, int k);

/// Distance 3 into Q_{2n+1}: pairs (01 / 10) per coordinate plus a shared
/// last coordinate carrying the weight parity.
FixedDistanceEmbedding embed_f(int n);

/// Distance 3 into Q_{3n}: triples 010/100, with 101 at the last set
/// coordinate when the weight is odd.
FixedDistanceEmbedding embed_fprime(int n);

/// Any distance m >= 2: even m uses f_k, m = 3 uses f, odd m >= 5 pads f with
/// 2l parity-dependent constant-weight coordinates.
FixedDistanceEmbedding embed_F(int n, int m);

struct FixedDistanceReport {
  bool injective = true;
  bool distances_ok = true;
  bool layers_ok = true;
  std::vector<int> layers_used;  // distinct image layers, ascending
  std::string violation;

  bool ok() const { return injective && distances_ok && layers_ok; }
};

FixedDistanceReport verify_fixed_distance(const FixedDistanceEmbedding& emb);

}  // namespace hcube

#endif
