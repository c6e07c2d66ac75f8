#include "hcube/c10.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>

namespace hcube {

namespace {

/// Constraint ids for ordered triples (a; {b,c}): a must precede both.
struct TripleIndex {
  int n;
  std::vector<std::array<int, 3>> triples;  // (a, b, c) with b < c

  explicit TripleIndex(int n_) : n(n_) {
    for (int a = 1; a <= n; ++a)
      for (int b = 1; b <= n; ++b)
        for (int c = b + 1; c <= n; ++c)
          if (a != b && a != c) triples.push_back({a, b, c});
  }

  static bool covered_by(const std::array<int, 3>& t, const Permutation& p) {
    return p.inverse(t[0]) < p.inverse(t[1]) && p.inverse(t[0]) < p.inverse(t[2]);
  }
};

Permutation random_permutation(int n, std::mt19937_64& rng) {
  std::vector<int> im(n);
  std::iota(im.begin(), im.end(), 1);
  for (int i = n - 1; i > 0; --i) {
    std::uniform_int_distribution<int> d(0, i);
    std::swap(im[i], im[d(rng)]);
  }
  return Permutation(std::move(im));
}

}  // namespace

PermutationCover build_cover(int n, std::uint64_t seed) {
  if (n < 3) throw std::invalid_argument("build_cover: n must be >= 3");
  TripleIndex idx(n);
  std::vector<char> covered(idx.triples.size(), 0);
  std::size_t uncovered = idx.triples.size();

  PermutationCover cover;
  cover.n = n;
  std::mt19937_64 rng(seed);
  int round = 0;
  while (uncovered > 0) {
    std::vector<Permutation> pool;
    if (round == 0) {
      pool.push_back(Permutation::identity(n));
      pool.push_back(Permutation::reversal(n));
    }
    for (int i = 0; i < 64; ++i) pool.push_back(random_permutation(n, rng));

    const Permutation* best = nullptr;
    int best_gain = -1;
    for (const auto& p : pool) {
      int gain = 0;
      for (std::size_t t = 0; t < idx.triples.size(); ++t)
        if (!covered[t] && TripleIndex::covered_by(idx.triples[t], p)) ++gain;
      if (gain > best_gain) {
        best_gain = gain;
        best = &p;
      }
    }
    if (best_gain > 0) {
      for (std::size_t t = 0; t < idx.triples.size(); ++t)
        if (!covered[t] && TripleIndex::covered_by(idx.triples[t], *best)) {
          covered[t] = 1;
          --uncovered;
        }
      cover.perms.push_back(*best);
    }
    ++round;
  }
  return cover;
}

bool verify_cover(const PermutationCover& cover) {
  TripleIndex idx(cover.n);
  for (const auto& t : idx.triples) {
    bool ok = false;
    for (const auto& p : cover.perms)
      if (TripleIndex::covered_by(t, p)) {
        ok = true;
        break;
      }
    if (!ok) return false;
  }
  return true;
}

int exact_min_cover_size(int n) {
  if (n < 3 || n > 4)
    throw std::invalid_argument("exact_min_cover_size: exhaustive only for n in {3,4}");
  std::vector<Permutation> all;
  std::vector<int> im(n);
  std::iota(im.begin(), im.end(), 1);
  do {
    all.push_back(Permutation(im));
  } while (std::next_permutation(im.begin(), im.end()));

  TripleIndex idx(n);
  const int t_count = static_cast<int>(idx.triples.size());
  std::vector<std::uint64_t> mask(all.size(), 0);
  for (std::size_t p = 0; p < all.size(); ++p)
    for (int t = 0; t < t_count; ++t)
      if (TripleIndex::covered_by(idx.triples[t], all[p]))
        mask[p] |= std::uint64_t{1} << t;
  const std::uint64_t full =
      t_count == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << t_count) - 1;

  for (std::size_t size = 1; size <= all.size(); ++size) {
    std::vector<std::size_t> pick;
    std::function<bool(std::size_t, std::uint64_t)> rec =
        [&](std::size_t from, std::uint64_t got) -> bool {
      if (got == full) return true;
      if (pick.size() == size) return false;
      for (std::size_t p = from; p < all.size(); ++p) {
        pick.push_back(p);
        if (rec(p + 1, got | mask[p])) return true;
        pick.pop_back();
      }
      return false;
    };
    if (rec(0, 0)) return static_cast<int>(size);
  }
  return static_cast<int>(all.size());
}

std::int64_t CombinedColoring::palette_bound() const {
  std::int64_t b = 2;
  for (int i = 0; i < num_perms; ++i) b *= 3;
  return b;
}

CombinedColoring combined_coloring(const HypercubeGraph& q,
                                   const PermutationCover& cover) {
  if (cover.n != q.n)
    throw std::invalid_argument("combined_coloring: cover dimension mismatch");
  CombinedColoring col;
  col.n = q.n;
  col.num_perms = static_cast<int>(cover.perms.size());
  const int m = q.graph.edge_count();
  col.parity.resize(m);
  col.prefix_value.assign(cover.perms.size(), std::vector<int>(m));
  col.code.resize(m);
  for (int e = 0; e < m; ++e) {
    StarEdge star = q.star(e);
    col.parity[e] = mask_layer(q.lower_mask(e)) % 2;
    CombinedColorCode code = col.parity[e];
    CombinedColorCode scale = 2;
    for (std::size_t p = 0; p < cover.perms.size(); ++p) {
      int v = prefix_color_permuted(star, cover.perms[p]);
      col.prefix_value[p][e] = v;
      code += scale * static_cast<CombinedColorCode>(v);
      scale *= 3;
    }
    col.code[e] = code;
  }
  return col;
}

LargestClassResult largest_class(const HypercubeGraph& q, const CombinedColoring& col) {
  std::map<CombinedColorCode, std::vector<int>> classes;
  for (int e = 0; e < q.graph.edge_count(); ++e) classes[col.code[e]].push_back(e);
  LargestClassResult res;
  std::size_t best = 0;
  for (const auto& [code, edges] : classes)
    if (edges.size() > best) {
      best = edges.size();
      res.code = code;
      res.edges = edges;
    }
  return res;
}

namespace {

// Target hypergraphs over letters a..e = bits 0..4.
constexpr std::array<std::array<std::uint8_t, 5>, 5> kTargets = {{
    {0b00011, 0b00110, 0b01100, 0b11000, 0b10001},  // H1: ab bc cd de ea
    {0b00111, 0b01110, 0b11100, 0b11001, 0b10011},  // H2: abc bcd cde dea eab
    {0b11100, 0b11001, 0b10011, 0b10110, 0b01110},  // H3: cde dea aeb ebc bcd
    {0b00111, 0b01110, 0b11100, 0b11010, 0b01011},  // H4: abc bcd cde bde bda
    {0b01111, 0b11110, 0b11101, 0b11011, 0b10111},  // H5: abcd bcde cdea deab eabc
}};

}  // namespace

TenCycleClass classify_10cycle(const HypercubeGraph& q,
                               const std::vector<VertexMask>& cycle) {
  if (cycle.size() != 10) throw std::invalid_argument("classify_10cycle: need 10 vertices");
  for (int i = 0; i < 10; ++i) {
    VertexMask u = cycle[i], v = cycle[(i + 1) % 10];
    if (std::popcount(u ^ v) != 1)
      throw std::invalid_argument("classify_10cycle: consecutive vertices not adjacent");
    for (int j = i + 1; j < 10; ++j)
      if (cycle[i] == cycle[j])
        throw std::invalid_argument("classify_10cycle: repeated vertex");
  }

  TenCycleClass out;
  int min_layer = mask_layer(cycle[0]), max_layer = min_layer;
  for (VertexMask v : cycle) {
    min_layer = std::min(min_layer, mask_layer(v));
    max_layer = std::max(max_layer, mask_layer(v));
  }
  if (max_layer - min_layer >= 2) {
    out.kind = TenCycleKind::NotSingleLayer;
    return out;
  }

  // Exactly 5 directions, each twice, on a single-layer 10-cycle.
  std::array<int, 33> dir_count{};
  for (int i = 0; i < 10; ++i)
    dir_count[std::countr_zero(cycle[i] ^ cycle[(i + 1) % 10]) + 1] += 1;
  out.star_positions.reserve(5);
  for (int dir = 1; dir <= 32; ++dir) {
    if (dir_count[dir] == 0) continue;
    if (dir_count[dir] != 2)
      throw std::logic_error("single-layer 10-cycle with direction count != 2");
    out.star_positions.push_back(dir);
  }
  if (out.star_positions.size() != 5)
    throw std::logic_error("single-layer 10-cycle without 5 doubled directions");

  // Hyperedges = upper endpoints restricted to the 5 star positions.
  std::vector<std::uint8_t> hyper;
  for (VertexMask v : cycle) {
    if (mask_layer(v) != max_layer) continue;
    std::uint8_t h = 0;
    for (int i = 0; i < 5; ++i)
      if (v >> (out.star_positions[i] - 1) & 1) h |= std::uint8_t{1} << i;
    hyper.push_back(h);
  }
  std::sort(hyper.begin(), hyper.end());
  std::uint64_t key = 0;
  for (std::uint8_t h : hyper) key = key << 8 | h;

  // All 120 relabelings of all five targets, precomputed once.
  struct Match {
    TenCycleKind kind;
    std::array<int, 5> letter_of;  // position index -> letter
  };
  static const std::map<std::uint64_t, Match> lookup = [] {
    std::map<std::uint64_t, Match> table;
    std::array<int, 5> sigma{0, 1, 2, 3, 4};  // letter -> position index
    do {
      for (int target = 0; target < 5; ++target) {
        std::vector<std::uint8_t> mapped;
        for (std::uint8_t h : kTargets[target]) {
          std::uint8_t m = 0;
          for (int letter = 0; letter < 5; ++letter)
            if (h >> letter & 1) m |= std::uint8_t{1} << sigma[letter];
          mapped.push_back(m);
        }
        std::sort(mapped.begin(), mapped.end());
        std::uint64_t k = 0;
        for (std::uint8_t m : mapped) k = k << 8 | m;
        Match match;
        match.kind = static_cast<TenCycleKind>(target);
        for (int letter = 0; letter < 5; ++letter)
          match.letter_of[sigma[letter]] = letter;
        table.emplace(k, match);
      }
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return table;
  }();

  auto it = lookup.find(key);
  if (it == lookup.end())
    throw std::logic_error("classify_10cycle: single-layer cycle matches no H1..H5");
  out.kind = it->second.kind;
  out.letter_of = it->second.letter_of;
  return out;
}

MonoC10Report verify_no_mono_c10(const HypercubeGraph& q,
                                 const PermutationCover& cover,
                                 const CombinedColoring& col) {
  MonoC10Report rep;
  std::vector<int> edge_ids(10);

  for_each_cycle_of_length(q.graph, 10, [&](const std::vector<int>& cyc) {
    ++rep.cycles;
    std::vector<VertexMask> masks(cyc.begin(), cyc.end());
    for (int i = 0; i < 10; ++i)
      edge_ids[i] = q.edge_id(masks[i], masks[(i + 1) % 10]);

    auto fail = [&](std::string why) {
      rep.ok = false;
      rep.failure = std::move(why);
      rep.witness_cycle = masks;
      return false;
    };

    bool mono = true;
    for (int i = 1; i < 10 && mono; ++i)
      mono = col.code[edge_ids[i]] == col.code[edge_ids[0]];
    if (mono) return fail("monochromatic 10-cycle under the combined coloring");

    TenCycleClass cls = classify_10cycle(q, masks);
    if (cls.kind == TenCycleKind::NotSingleLayer) {
      bool parity_const = true;
      for (int i = 1; i < 10 && parity_const; ++i)
        parity_const = col.parity[edge_ids[i]] == col.parity[edge_ids[0]];
      if (parity_const)
        return fail("multi-layer cycle with constant layer parity");
      return true;
    }
    ++rep.single_layer;
    rep.kind_counts[static_cast<int>(cls.kind)] += 1;

    auto constant_under = [&](std::size_t p) {
      for (int i = 1; i < 10; ++i)
        if (col.prefix_value[p][edge_ids[i]] != col.prefix_value[p][edge_ids[0]])
          return false;
      return true;
    };

    switch (cls.kind) {
      case TenCycleKind::H1:
      case TenCycleKind::H2:
      case TenCycleKind::H3:
        for (std::size_t p = 0; p < cover.perms.size(); ++p)
          if (constant_under(p))
            return fail("H1-H3 cycle constant under a cover permutation");
        break;
      case TenCycleKind::H4: {
        // some cover permutation puts this cycle's 'c' before its 'b' and 'e'
        int c_pos = 0, b_pos = 0, e_pos = 0;
        for (int i = 0; i < 5; ++i) {
          if (cls.letter_of[i] == 2) c_pos = cls.star_positions[i];
          if (cls.letter_of[i] == 1) b_pos = cls.star_positions[i];
          if (cls.letter_of[i] == 4) e_pos = cls.star_positions[i];
        }
        bool broken = false;
        for (std::size_t p = 0; p < cover.perms.size() && !broken; ++p) {
          const Permutation& pi = cover.perms[p];
          if (pi.inverse(c_pos) < pi.inverse(b_pos) &&
              pi.inverse(c_pos) < pi.inverse(e_pos))
            broken = !constant_under(p);
        }
        if (!broken)
          return fail("H4 cycle not broken by a c-first cover permutation");
        break;
      }
      case TenCycleKind::H5:
        break;  // covered by the global monochromatic check
      case TenCycleKind::NotSingleLayer:
        break;
    }
    return true;
  });
  return rep;
}

namespace {

const std::vector<std::vector<std::string>> kHCycles = {
    {"1*000", "*1000", "01*00", "0*100", "001*0", "00*10", "0001*", "000*1",
     "*0001", "1000*"},
    {"11*00", "*1100", "011*0", "0*110", "0011*", "00*11", "*0011", "100*1",
     "1*001", "1100*"},
    {"0011*", "00*11", "*0011", "100*1", "1*001", "*1001", "01*01", "0110*",
     "011*0", "0*110"},
    {"10*01", "*0101", "001*1", "0011*", "0*110", "01*10", "0101*", "0*011",
     "*0011", "100*1"},
};

}  // namespace

const std::vector<std::vector<std::string>>& tabulated_h_cycles() { return kHCycles; }

std::vector<VertexMask> cycle_from_star_strings(const std::vector<std::string>& edges) {
  std::vector<std::pair<VertexMask, VertexMask>> ends;
  for (const auto& s : edges) {
    StarEdge e = StarEdge::parse(s);
    VertexMask lo = 0;
    for (int i : e.lower().elements()) lo |= VertexMask{1} << (i - 1);
    VertexMask hi = lo | (VertexMask{1} << (e.direction() - 1));
    ends.emplace_back(lo, hi);
  }
  const std::size_t m = ends.size();
  auto shares = [&](std::size_t i, VertexMask v) {
    return ends[i].first == v || ends[i].second == v;
  };
  // start at the endpoint of edge 0 shared with the last edge
  VertexMask v0 = shares(m - 1, ends[0].first) ? ends[0].first : ends[0].second;
  std::vector<VertexMask> walk{v0};
  VertexMask cur = v0;
  for (std::size_t i = 0; i < m - 1; ++i) {
    cur = ends[i].first == cur ? ends[i].second : ends[i].first;
    walk.push_back(cur);
  }
  return walk;
}

std::string render_h_cycle_table() {
  std::ostringstream out;
  out << "Star representation of the tabulated 10-cycles (columns H1..H4)\n";
  const auto& cols = kHCycles;
  out << "H1      H2      H3      H4\n";
  for (int r = 0; r < 10; ++r) {
    std::ostringstream line;
    for (std::size_t c = 0; c < cols.size(); ++c) {
      std::string cell = cols[c][r];
      if (c + 1 < cols.size()) cell.resize(8, ' ');
      line << cell;
    }
    out << line.str() << "\n";
  }
  return out.str();
}

}  // namespace hcube
