#include "hcube/distance_embedding.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <stdexcept>

namespace hcube {

namespace {

void check_source_dim(int n) {
  if (n < 1 || n > 20)
    throw std::invalid_argument("fixed-distance embeddings support 1 <= n <= 20");
}

int weight(VertexMask v) { return std::popcount(v); }

}  // namespace

FixedDistanceEmbedding embed_fk(int n, int k) {
  check_source_dim(n);
  if (k < 0) throw std::invalid_argument("embed_fk: k must be >= 0");
  FixedDistanceEmbedding out;
  out.source_dimension = n;
  out.distance = 2 * k + 2;
  const int block = 2 * k + 2;
  out.target_dimension = block * n;

  for (VertexMask v = 0; v < (VertexMask{1} << n); ++v) {
    BitVec bits;
    for (int i = 1; i <= n; ++i) {
      // block i = 0101...01 when v[i]=0, 1010...10 when v[i]=1
      const int base = block * (i - 1);
      const bool one = (v >> (i - 1)) & 1;
      for (int p = 1; p <= block; ++p)
        if ((p % 2 == 1) == one) bits.set(base + p);
    }
    out.image.emplace_back(out.target_dimension, bits);
  }
  return out;
}

FixedDistanceEmbedding embed_f(int n) {
  check_source_dim(n);
  FixedDistanceEmbedding out;
  out.source_dimension = n;
  out.distance = 3;
  out.target_dimension = 2 * n + 1;

  for (VertexMask v = 0; v < (VertexMask{1} << n); ++v) {
    BitVec bits;
    for (int i = 1; i <= n; ++i) {
      // pair (w[2i-1], w[2i]) = 01 when v[i]=0, 10 when v[i]=1
      if ((v >> (i - 1)) & 1)
        bits.set(2 * i - 1);
      else
        bits.set(2 * i);
    }
    if (weight(v) % 2 == 1) bits.set(2 * n + 1);
    out.image.emplace_back(out.target_dimension, bits);
  }
  return out;
}

FixedDistanceEmbedding embed_fprime(int n) {
  check_source_dim(n);
  FixedDistanceEmbedding out;
  out.source_dimension = n;
  out.distance = 3;
  out.target_dimension = 3 * n;

  for (VertexMask v = 0; v < (VertexMask{1} << n); ++v) {
    BitVec bits;
    const bool odd = weight(v) % 2 == 1;
    const int last_one = v == 0 ? 0 : 32 - std::countl_zero(v);
    for (int i = 1; i <= n; ++i) {
      const int base = 3 * (i - 1);
      if (!((v >> (i - 1)) & 1)) {
        bits.set(base + 2);  // 010
      } else if (odd && i == last_one) {
        bits.set(base + 1);  // 101
        bits.set(base + 3);
      } else {
        bits.set(base + 1);  // 100
      }
    }
    out.image.emplace_back(out.target_dimension, bits);
  }
  return out;
}

FixedDistanceEmbedding embed_F(int n, int m) {
  check_source_dim(n);
  if (m < 2) throw std::invalid_argument("embed_F: m must be >= 2");
  if (m % 2 == 0) return embed_fk(n, (m - 2) / 2);
  if (m == 3) return embed_f(n);

  // odd m = 3 + 2l: pad f with l zeros + l ones (even weight) or l ones +
  // l zeros (odd weight)
  const int pad = (m - 3) / 2;
  FixedDistanceEmbedding base = embed_f(n);
  FixedDistanceEmbedding out;
  out.source_dimension = n;
  out.distance = m;
  out.target_dimension = base.target_dimension + 2 * pad;
  for (VertexMask v = 0; v < (VertexMask{1} << n); ++v) {
    BitVec bits = base.image[v].bits();
    const bool odd = weight(v) % 2 == 1;
    for (int p = 1; p <= pad; ++p)
      bits.set(base.target_dimension + (odd ? p : pad + p));
    out.image.emplace_back(out.target_dimension, bits);
  }
  return out;
}

FixedDistanceReport verify_fixed_distance(const FixedDistanceEmbedding& emb) {
  FixedDistanceReport rep;
  const int n = emb.source_dimension;
  std::set<BitVec> seen;
  std::set<int> layers;
  for (VertexMask v = 0; v < (VertexMask{1} << n); ++v) {
    if (!seen.insert(emb.image[v].bits()).second) {
      rep.injective = false;
      rep.violation = "duplicate image of vertex mask " + std::to_string(v);
    }
    layers.insert(emb.image[v].layer());
  }
  rep.layers_used.assign(layers.begin(), layers.end());
  if (emb.distance % 2 == 0) {
    rep.layers_ok = layers.size() == 1;
  } else {
    rep.layers_ok = layers.size() <= 2 &&
                    (layers.size() < 2 ||
                     *layers.rbegin() - *layers.begin() == 1);
  }
  if (!rep.layers_ok && rep.violation.empty())
    rep.violation = "images span invalid layer set";

  for (VertexMask v = 0; v < (VertexMask{1} << n); ++v)
    for (int i = 0; i < n; ++i) {
      VertexMask u = v ^ (VertexMask{1} << i);
      if (u < v) continue;
      int d = emb.image[v].hamming(emb.image[u]);
      if (d != emb.distance) {
        rep.distances_ok = false;
        if (rep.violation.empty())
          rep.violation = "adjacent masks " + std::to_string(v) + "," +
                          std::to_string(u) + " at distance " + std::to_string(d);
      }
    }
  return rep;
}

}  // namespace hcube
