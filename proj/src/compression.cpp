#include "hcube/compression.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>
#include <unordered_set>

namespace hcube {

std::int64_t binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::int64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::int64_t colex_rank(SetMask s) {
  std::int64_t rank = 0;
  int idx = 1;
  for (SetMask rest = s; rest; rest &= rest - 1, ++idx) {
    int elem = std::countr_zero(rest) + 1;
    rank += binomial(elem - 1, idx);
  }
  return rank;
}

SetMask colex_unrank(std::int64_t r, int k) {
  if (r < 0 || k < 0) throw std::invalid_argument("colex_unrank: negative input");
  SetMask s = 0;
  for (int i = k; i >= 1; --i) {
    // largest element e with C(e-1, i) <= r
    int e = i;  // C(i-1, i) = 0 <= r always
    while (binomial(e, i) <= r) ++e;
    s |= SetMask{1} << (e - 1);
    r -= binomial(e - 1, i);
  }
  if (r != 0) throw std::invalid_argument("colex_unrank: rank out of range");
  return s;
}

std::vector<SetMask> first_colex(int n, int k, std::int64_t m) {
  if (m < 0 || m > binomial(n, k))
    throw std::invalid_argument("first_colex: requested " + std::to_string(m) +
                                " sets, only C(" + std::to_string(n) + "," +
                                std::to_string(k) + ") exist");
  std::vector<SetMask> out;
  out.reserve(m);
  for (std::int64_t r = 0; r < m; ++r) out.push_back(colex_unrank(r, k));
  return out;
}

void SetFamilyPair::validate() const {
  auto check = [&](const std::vector<SetMask>& fam, int size, const char* name) {
    std::unordered_set<SetMask> seen;
    for (SetMask s : fam) {
      if (std::popcount(s) != size)
        throw std::invalid_argument(std::string(name) + ": member of wrong size");
      if (n < 64 && (s >> n))
        throw std::invalid_argument(std::string(name) + ": member outside [n]");
      if (!seen.insert(s).second)
        throw std::invalid_argument(std::string(name) + ": duplicate member");
    }
  };
  if (k < 1) throw std::invalid_argument("SetFamilyPair: k must be >= 1");
  check(a, k, "family A");
  check(b, k - 1, "family B");
}

SetFamilyPair shift(const SetFamilyPair& pair, int i, int j) {
  if (!(1 <= i && i < j && j <= pair.n))
    throw std::invalid_argument("shift: need 1 <= i < j <= n");
  const SetMask bi = SetMask{1} << (i - 1);
  const SetMask bj = SetMask{1} << (j - 1);
  auto apply = [&](const std::vector<SetMask>& fam) {
    std::unordered_set<SetMask> members(fam.begin(), fam.end());
    std::vector<SetMask> out;
    out.reserve(fam.size());
    for (SetMask x : fam) {
      SetMask shifted = (x & ~bj) | bi;
      if (!(x & bi) && (x & bj) && !members.count(shifted))
        out.push_back(shifted);
      else
        out.push_back(x);
    }
    return out;
  };
  SetFamilyPair out = pair;
  out.a = apply(pair.a);
  out.b = apply(pair.b);
  return out;
}

SetFamilyPair compress(const SetFamilyPair& pair) {
  SetFamilyPair cur = pair;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i = 1; i <= cur.n && !changed; ++i)
      for (int j = i + 1; j <= cur.n && !changed; ++j) {
        SetFamilyPair next = shift(cur, i, j);
        if (next.a != cur.a || next.b != cur.b) {
          cur = std::move(next);
          changed = true;
        }
      }
  }
  return cur;
}

std::int64_t edge_count(const SetFamilyPair& pair) {
  std::unordered_set<SetMask> in_a(pair.a.begin(), pair.a.end());
  std::int64_t count = 0;
  for (SetMask b : pair.b)
    for (int e = 1; e <= pair.n; ++e) {
      SetMask be = SetMask{1} << (e - 1);
      if (!(b & be) && in_a.count(b | be)) ++count;
    }
  return count;
}

SetFamilyPair materialize(const CompressedSpec& spec) {
  SetFamilyPair pair;
  pair.n = spec.n;
  pair.k = spec.k;
  pair.a = first_colex(spec.n, spec.k, spec.num_a);
  pair.b = first_colex(spec.n, spec.k - 1, spec.num_b);
  return pair;
}

std::int64_t compressed_edge_count(const CompressedSpec& spec) {
  return edge_count(materialize(spec));
}

namespace {

/// Smallest ground-set size that holds the first m colex k-subsets.
int ground_size(std::int64_t m, int k) {
  if (k == 0) {
    if (m > 1) throw std::invalid_argument("only one 0-subset exists");
    return 0;
  }
  int n = k;
  while (binomial(n, k) < m) ++n;
  return n;
}

}  // namespace

EdgeMaxResult e_exact(std::int64_t t, int k_max) {
  if (t < 1) throw std::invalid_argument("e_exact: t must be >= 1");
  if (k_max <= 0)
    k_max = static_cast<int>(std::ceil(std::log2(static_cast<double>(t)))) + 2;

  EdgeMaxResult best;
  best.t = t;
  best.value = -1;
  for (int k = 1; k <= k_max; ++k) {
    for (std::int64_t na = 0; na <= t; ++na) {
      std::int64_t nb = t - na;
      if (k == 1 && nb > 1) continue;  // a single 0-subset exists
      CompressedSpec spec;
      spec.k = k;
      spec.num_a = na;
      spec.num_b = nb;
      spec.n = std::max({k, ground_size(na, k), ground_size(nb, k - 1)});
      std::int64_t value = compressed_edge_count(spec);
      if (value > best.value) {
        best.value = value;
        best.witness = spec;
      }
    }
  }
  return best;
}

}  // namespace hcube
