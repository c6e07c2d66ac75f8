#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <bit>

#include "hcube/compression.hpp"

using namespace hcube;

namespace {

SetMask mask_of(std::initializer_list<int> elems) {
  SetMask m = 0;
  for (int e : elems) m |= SetMask{1} << (e - 1);
  return m;
}

/// All subsets of {0..universe-1} picked by mask iteration, as families.
std::vector<std::vector<SetMask>> all_families(const std::vector<SetMask>& pool) {
  std::vector<std::vector<SetMask>> out;
  for (std::uint32_t pick = 0; pick < (1u << pool.size()); ++pick) {
    std::vector<SetMask> fam;
    for (std::size_t i = 0; i < pool.size(); ++i)
      if (pick >> i & 1) fam.push_back(pool[i]);
    out.push_back(std::move(fam));
  }
  return out;
}

std::vector<SetMask> subsets_of_size(int n, int k) {
  std::vector<SetMask> out;
  for (SetMask m = 0; m < (SetMask{1} << n); ++m)
    if (std::popcount(m) == k) out.push_back(m);
  return out;
}

}  // namespace

TEST_CASE("binomials") {
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(4, 0) == 1);
  CHECK(binomial(3, 5) == 0);
  CHECK(binomial(20, 10) == 184756);
}

TEST_CASE("colex basics") {
  auto first = first_colex(4, 2, 3);
  REQUIRE(first.size() == 3);
  CHECK(first[0] == mask_of({1, 2}));
  CHECK(first[1] == mask_of({1, 3}));
  CHECK(first[2] == mask_of({2, 3}));
  CHECK(colex_rank(mask_of({1, 2})) == 0);
  CHECK_THROWS(first_colex(3, 2, 4));  // only C(3,2)=3 exist
}

TEST_CASE("colex rank and unrank are mutually inverse") {
  // exhaustive over all 3-subsets of [6]
  std::int64_t idx = 0;
  for (SetMask m : subsets_of_size(6, 3)) {
    CHECK(colex_unrank(colex_rank(m), 3) == m);
    ++idx;
  }
  CHECK(idx == 20);
  for (std::int64_t r = 0; r < 35; ++r) CHECK(colex_rank(colex_unrank(r, 3)) == r);
}

TEST_CASE("shift examples") {
  SetFamilyPair p;
  p.n = 2;
  p.k = 1;
  p.a = {mask_of({2})};
  auto s = shift(p, 1, 2);
  CHECK(s.a == std::vector<SetMask>{mask_of({1})});

  SetFamilyPair q;
  q.n = 2;
  q.k = 1;
  q.a = {mask_of({1}), mask_of({2})};
  auto s2 = shift(q, 1, 2);
  CHECK(s2.a == q.a);  // target already present

  CHECK_THROWS(shift(p, 2, 1));
}

TEST_CASE("compress examples") {
  SetFamilyPair p;
  p.n = 3;
  p.k = 2;
  p.a = {mask_of({2, 3})};
  p.b = {mask_of({3})};
  auto c = compress(p);
  CHECK(c.a == std::vector<SetMask>{mask_of({1, 2})});
  CHECK(c.b == std::vector<SetMask>{mask_of({1})});

  // fixpoint: an already-compressed pair is unchanged
  auto c2 = compress(c);
  CHECK(c2.a == c.a);
  CHECK(c2.b == c.b);
}

TEST_CASE("edge counts") {
  SetFamilyPair star;
  star.n = 3;
  star.k = 1;
  star.a = {mask_of({1}), mask_of({2}), mask_of({3})};
  star.b = {0};  // the empty set
  CHECK(edge_count(star) == 3);

  CHECK(compressed_edge_count({4, 2, 6, 4}) == 12);  // the full layer

  // brute-force cross-check of a compressed spec
  CompressedSpec spec{5, 2, 3, 2};
  auto pair = materialize(spec);
  std::int64_t direct = 0;
  for (SetMask a : pair.a)
    for (SetMask b : pair.b)
      if ((a & b) == b && std::popcount(a ^ b) == 1) ++direct;
  CHECK(compressed_edge_count(spec) == direct);
}

TEST_CASE("single shifts never lose edges (n = 3 exhaustive)") {
  const int n = 3;
  for (int k = 1; k <= 3; ++k) {
    auto a_pool = subsets_of_size(n, k);
    auto b_pool = subsets_of_size(n, k - 1);
    for (const auto& a : all_families(a_pool))
      for (const auto& b : all_families(b_pool)) {
        SetFamilyPair pair;
        pair.n = n;
        pair.k = k;
        pair.a = a;
        pair.b = b;
        std::int64_t before = edge_count(pair);
        for (int i = 1; i <= n; ++i)
          for (int j = i + 1; j <= n; ++j) {
            auto shifted = shift(pair, i, j);
            CHECK(shifted.a.size() == a.size());
            CHECK(shifted.b.size() == b.size());
            CHECK(edge_count(shifted) >= before);
          }
        CHECK(edge_count(compress(pair)) >= before);
      }
  }
}

TEST_CASE("compression dominance (n = 3 exhaustive)") {
  const int n = 3;
  for (int k = 1; k <= 3; ++k) {
    auto a_pool = subsets_of_size(n, k);
    auto b_pool = subsets_of_size(n, k - 1);
    for (const auto& a : all_families(a_pool))
      for (const auto& b : all_families(b_pool)) {
        SetFamilyPair pair{n, k, a, b};
        CompressedSpec spec{n, k, static_cast<std::int64_t>(a.size()),
                            static_cast<std::int64_t>(b.size())};
        CHECK(edge_count(pair) <= compressed_edge_count(spec));
      }
  }
}

TEST_CASE("e_exact small values") {
  CHECK(e_exact(1).value == 0);
  CHECK(e_exact(2).value == 1);
  CHECK(e_exact(4).value == 3);  // star in layer 1
}

TEST_CASE("e_exact agrees with the brute-force oracle for t <= 6") {
  // oracle: all (A, B) pairs over [4], every k; induced edge maximum per t
  const int n = 4;
  std::vector<std::int64_t> best(7, -1);
  for (int k = 1; k <= n; ++k) {
    auto a_pool = subsets_of_size(n, k);
    auto b_pool = subsets_of_size(n, k - 1);
    for (const auto& a : all_families(a_pool))
      for (const auto& b : all_families(b_pool)) {
        auto t = static_cast<std::int64_t>(a.size() + b.size());
        if (t < 1 || t > 6) continue;
        SetFamilyPair pair{n, k, a, b};
        best[t] = std::max(best[t], edge_count(pair));
      }
  }
  for (std::int64_t t = 2; t <= 6; ++t) CHECK(e_exact(t).value == best[t]);
}

TEST_CASE("e_exact growth and degree bound") {
  std::int64_t prev = -1;
  for (std::int64_t t = 1; t <= 12; ++t) {
    auto r = e_exact(t);
    CHECK(r.value >= prev);
    CHECK(r.value <= r.witness.k * t);
    prev = r.value;
  }
}
