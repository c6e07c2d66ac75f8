#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "hcube/embedding.hpp"
#include "hcube/subdivision.hpp"

using namespace hcube;

namespace {

std::string restricted(const HypercubeVertex& v, const std::vector<int>& coords) {
  std::string s;
  for (int c : coords) s += v.contains(c) ? '1' : '0';
  return s;
}

}  // namespace

TEST_CASE("subdivide counting") {
  auto c8 = subdivide(Graph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}), 1);
  CHECK(c8.graph.vertex_count() == 8);
  CHECK(c8.graph.edge_count() == 8);
  CHECK(girth(c8.graph) == 8);

  auto c6 = subdivide(complete_graph(3), 1);
  CHECK(c6.graph.vertex_count() == 6);
  CHECK(girth(c6.graph) == 6);

  auto k4 = subdivide(complete_graph(4), 2);
  CHECK(k4.graph.vertex_count() == 4 + 2 * 6);
  CHECK(k4.graph.edge_count() == 18);

  auto same = subdivide(complete_graph(4), 0);
  CHECK(same.graph.vertex_count() == 4);
  CHECK(same.graph.edge_count() == 6);
}

TEST_CASE("subdivision path structure") {
  auto sub = subdivide(complete_graph(3), 3);
  for (int e = 0; e < sub.base.edge_count(); ++e) {
    const auto& path = sub.paths[e];
    CHECK(path.size() == 5);  // x, z1..z3, y
    for (std::size_t i = 0; i + 1 < path.size(); ++i)
      CHECK(sub.graph.adjacent(path[i], path[i + 1]));
  }
}

TEST_CASE("odd subdivision of K_t: worked table entries") {
  // t=2, k=1: f(z1),f(z2),f(z3) restricted to (b_e, x1, y1)
  auto se = embed_odd_subdivision_complete(2, 1);
  std::vector<int> coords{3, 1, 2};
  CHECK(restricted(se.embedding.image[2], coords) == "110");
  CHECK(restricted(se.embedding.image[3], coords) == "100");
  CHECK(restricted(se.embedding.image[4], coords) == "101");

  // t=2, k=2: f(z5) restricted to (b_e, x1, x2, y1, y2)
  auto se2 = embed_odd_subdivision_complete(2, 2);
  std::vector<int> coords2{5, 1, 2, 3, 4};
  CHECK(restricted(se2.embedding.image[2 + 4], coords2) == "10011");
}

TEST_CASE("odd subdivision of K_4 with k=0 lands in layers 1-2 of Q_4") {
  auto se = embed_odd_subdivision_complete(4, 0);
  CHECK(se.embedding.ambient_dimension == 4);
  CHECK(verify_layer_embedding(se.subdivision.graph, se.embedding).ok);
  for (int e = 0; e < se.subdivision.base.edge_count(); ++e) {
    auto [x, y] = se.subdivision.base.edge(e);
    int z = se.subdivision.paths[e][1];
    CHECK(se.embedding.image[z].layer() == 2);
    CHECK(se.embedding.image[z].contains(x + 1));
    CHECK(se.embedding.image[z].contains(y + 1));
  }
}

TEST_CASE("even subdivision of K_tt: worked table entries") {
  // t=1, k=3: f(z3) restricted to (a, b, c, s1, s2)
  auto se = embed_even_subdivision_bipartite(1, 3);
  std::vector<int> coords{1, 2, 3, 4, 5};
  CHECK(restricted(se.embedding.image[2 + 2], coords) == "00101");

  // t=1, k=5: f(z10) restricted to (a, b, c, s1..s4)
  auto se5 = embed_even_subdivision_bipartite(1, 5);
  std::vector<int> coords5{1, 2, 3, 4, 5, 6, 7};
  CHECK(restricted(se5.embedding.image[2 + 9], coords5) == "0101001");
}

TEST_CASE("even subdivision with k=1, t=2 verifies step by step") {
  auto se = embed_even_subdivision_bipartite(2, 1);
  CHECK(se.embedding.ambient_dimension == 5);
  CHECK(verify_layer_embedding(se.subdivision.graph, se.embedding).ok);
  std::set<int> layers;
  for (const auto& img : se.embedding.image) layers.insert(img.layer());
  CHECK(layers == std::set<int>{2, 3});
  for (const auto& path : se.subdivision.paths)
    for (std::size_t i = 0; i + 1 < path.size(); ++i)
      CHECK(se.embedding.image[path[i]].hamming(se.embedding.image[path[i + 1]]) == 1);
}

TEST_CASE("table fidelity: every tabulated column matches the construction") {
  for (int k : {1, 2, 3}) {
    auto res = table_fidelity_check(1, k);
    CHECK(res.ok);
    for (const auto& m : res.mismatches) MESSAGE(m);
  }
  for (int k : {3, 4, 5}) {
    auto res = table_fidelity_check(2, k);
    CHECK(res.ok);
    for (const auto& m : res.mismatches) MESSAGE(m);
  }
  CHECK_THROWS(table_fidelity_check(1, 4));
  CHECK_THROWS(table_fidelity_check(3, 3));
}

TEST_CASE("worked single rows from the tables") {
  // table 1, k=3: f(z7) = 1000111; table 2, k=4: f(z8) = 010101
  auto se1 = embed_odd_subdivision_complete(2, 3);
  CHECK(restricted(se1.embedding.image[2 + 6], {7, 1, 2, 3, 4, 5, 6}) == "1000111");
  auto se2 = embed_even_subdivision_bipartite(1, 4);
  CHECK(restricted(se2.embedding.image[2 + 7], {1, 2, 3, 4, 5, 6}) == "010101");
}

TEST_CASE("odd family verifies with partite certificates (unit-scale)") {
  for (int t = 1; t <= 3; ++t)
    for (int k = 0; k <= 3; ++k) {
      auto se = embed_odd_subdivision_complete(t, k);
      auto rep = verify_layer_embedding(se.subdivision.graph, se.embedding);
      CHECK(rep.ok);
      if (!rep.ok) MESSAGE("t=", t, " k=", k, ": ", rep.violation);
      if (k >= 1 && t >= 2) {
        REQUIRE(!se.partite_parts.empty());
        CHECK(se.partite_parts.size() == static_cast<std::size_t>(k) + 1);
        std::string why;
        auto cert = check_partite(se.embedding, se.partite_parts, &why);
        CHECK(cert.has_value());
        if (!cert) MESSAGE(why);
        for (int i = 0; i < k; ++i)
          CHECK(se.partite_parts[i].size() == static_cast<std::size_t>(t));
        CHECK(se.partite_parts[k].size() ==
              static_cast<std::size_t>(t) * (t - 1) / 2);
      }
    }
}

TEST_CASE("even family verifies, partite for even k >= 4 (unit-scale)") {
  for (int t = 1; t <= 2; ++t)
    for (int k = 1; k <= 4; ++k) {
      auto se = embed_even_subdivision_bipartite(t, k);
      auto rep = verify_layer_embedding(se.subdivision.graph, se.embedding);
      CHECK(rep.ok);
      if (!rep.ok) MESSAGE("t=", t, " k=", k, ": ", rep.violation);
      if (k >= 4 && k % 2 == 0) {
        REQUIRE(!se.partite_parts.empty());
        CHECK(se.partite_parts.size() == static_cast<std::size_t>(t * t) + 2);
        std::string why;
        auto cert = check_partite(se.embedding, se.partite_parts, &why);
        CHECK(cert.has_value());
        if (!cert) MESSAGE(why);
        CHECK(se.partite_parts[0].size() <= static_cast<std::size_t>(2 * t));
        for (int e = 0; e < t * t; ++e)
          CHECK(se.partite_parts[1 + e].size() <= static_cast<std::size_t>(k));
        CHECK(se.partite_parts.back().size() <=
              static_cast<std::size_t>(k) * t * t);
      } else {
        CHECK(se.partite_parts.empty());
      }
    }
}

TEST_CASE("the embedded graph is the subdivision, structurally") {
  auto se = embed_odd_subdivision_complete(3, 2);
  const Graph& g = se.subdivision.graph;
  auto independent = subdivide(complete_graph(3), 5);
  CHECK(g.vertex_count() == independent.graph.vertex_count());
  CHECK(g.edge_count() == independent.graph.edge_count());
  CHECK(g.vertex_count() == 3 + 5 * 3);
  // every subdivision path has length 2k+2 between its branch vertices
  for (const auto& path : se.subdivision.paths)
    CHECK(path.size() == 2 + 2 * 2 + 1);
}

TEST_CASE("rendered tables carry every tabulated column") {
  std::string t1 = render_indicator_table(1);
  CHECK(t1.find("k=1") != std::string::npos);
  CHECK(t1.find("0111000") != std::string::npos);
  std::string t2 = render_indicator_table(2);
  CHECK(t2.find("0101001") != std::string::npos);
}
