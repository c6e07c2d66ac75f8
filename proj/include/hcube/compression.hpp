#ifndef HCUBE_COMPRESSION_HPP
#define HCUBE_COMPRESSION_HPP

#include <cstdint>
#include <vector>

namespace hcube {

/// Subsets of [n] as masks (bit i-1 = element i); colex order on equal-size
/// sets coincides with numeric order of the masks.
using SetMask = std::uint64_t;

std::int64_t binomial(int n, int k);

/// Rank of S among the |S|-subsets in colex order, starting at 0.
std::int64_t colex_rank(SetMask s);
/// The rank-r k-subset in colex order (of the naturals; n-independent).
SetMask colex_unrank(std::int64_t r, int k);
/// The m colex-least k-subsets of [n]; throws if m > C(n,k).
std::vector<SetMask> first_colex(int n, int k, std::int64_t m);

/// The bipartite layer graph Q(n,k;A,B): A k-subsets, B (k-1)-subsets,
/// edges B subset-of A.
struct SetFamilyPair {
  int n = 0, k = 0;
  std::vector<SetMask> a;  // k-subsets
  std::vector<SetMask> b;  // (k-1)-subsets

  void validate() const;  // distinctness, uniformity, range
};

/// Applies the shift R_ij (replace j by i when i is absent, j present, and
/// the result is not already in the family) to both families independently.
SetFamilyPair shift(const SetFamilyPair& pair, int i, int j);

/// Repeated shifts over all i < j (lexicographic sweeps, restart on change)
/// until both families are left-compressed.
SetFamilyPair compress(const SetFamilyPair& pair);

std::int64_t edge_count(const SetFamilyPair& pair);

struct CompressedSpec {
  int n = 0, k = 0;
  std::int64_t num_a = 0, num_b = 0;
};
SetFamilyPair materialize(const CompressedSpec& spec);
std::int64_t compressed_edge_count(const CompressedSpec& spec);

/// Exact e(t): the largest edge count of a t-vertex layered graph, with a
/// witnessing compressed spec. Every layered t-vertex graph is dominated by
/// a compressed one, so maximizing over compressed splits with k <= k_max is
/// exact (k_max <= 0 selects ceil(log2 t) + 2).
struct EdgeMaxResult {
  std::int64_t t = 0;
  std::int64_t value = 0;
  CompressedSpec witness;
};
EdgeMaxResult e_exact(std::int64_t t, int k_max = 0);

}  // namespace hcube

#endif
