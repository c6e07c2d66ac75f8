#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "hcube/cube.hpp"

using namespace hcube;

TEST_CASE("vertex layers") {
  CHECK(HypercubeVertex(5).layer() == 0);
  CHECK(HypercubeVertex(5, {1, 2, 4}).layer() == 3);
  for (int n = 1; n <= 8; ++n) {
    std::vector<int> all;
    for (int i = 1; i <= n; ++i) all.push_back(i);
    CHECK(HypercubeVertex(n, all).layer() == n);
  }
}

TEST_CASE("vertex string forms") {
  HypercubeVertex v(5, {1, 2, 4});
  CHECK(v.to_binary() == "11010");
  CHECK(v.to_set_string() == "{1,2,4}");
  CHECK(HypercubeVertex::from_binary("11010") == v);
  CHECK_THROWS(HypercubeVertex::from_binary("11x10"));
  CHECK_THROWS(HypercubeVertex(3, {4}));
}

TEST_CASE("star strings") {
  CHECK(StarEdge(HypercubeVertex(5, {1, 2}), 4).star_string() == "110*0");
  CHECK(StarEdge(HypercubeVertex(3), 1).star_string() == "*00");
  StarEdge one = StarEdge::parse("*");
  CHECK(one.dimension() == 1);
  CHECK(one.direction() == 1);
  CHECK(one.lower().layer() == 0);
}

TEST_CASE("star parse errors name the position") {
  CHECK_THROWS_WITH_AS(StarEdge::parse("1*1*"),
                       doctest::Contains("second star at position 4"),
                       std::invalid_argument);
  CHECK_THROWS_AS(StarEdge::parse("110"), std::invalid_argument);
  CHECK_THROWS_WITH_AS(StarEdge::parse("1a*"), doctest::Contains("position 2"),
                       std::invalid_argument);
  CHECK_THROWS_AS(StarEdge::parse(""), std::invalid_argument);
}

TEST_CASE("star round trip over all edges of Q4") {
  HypercubeGraph q = HypercubeGraph::build(4);
  REQUIRE(q.graph.edge_count() == 4 * 8);
  for (int e = 0; e < q.graph.edge_count(); ++e) {
    StarEdge star = q.star(e);
    CHECK(StarEdge::parse(star.star_string()) == star);
    // exactly one star, endpoint layers differ by one
    CHECK(std::count(star.star_string().begin(), star.star_string().end(), '*') == 1);
    CHECK(star.upper().layer() == star.lower().layer() + 1);
  }
}

TEST_CASE("prefix coloring") {
  CHECK(prefix_color(StarEdge::parse("01001*01")) == 1);  // worked example
  CHECK(prefix_color(StarEdge::parse("*000")) == 0);
  CHECK(prefix_color(StarEdge::parse("11*11")) == 0);
}

TEST_CASE("prefix coloring is invariant under 0-padding") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    int n = 1 + static_cast<int>(rng() % 8);
    std::string s(n, '0');
    for (auto& ch : s)
      if (rng() % 2) ch = '1';
    s[rng() % n] = '*';
    int base = prefix_color(StarEdge::parse(s));
    CHECK(prefix_color(StarEdge::parse("00" + s)) == base);
    CHECK(prefix_color(StarEdge::parse(s + "000")) == base);
    CHECK(prefix_color(StarEdge::parse("0" + s + "0")) == base);
  }
}

TEST_CASE("permuted prefix coloring") {
  StarEdge e = StarEdge::parse("01001*01");
  CHECK(prefix_color_permuted(e, Permutation::identity(8)) == 1);
  StarEdge f = StarEdge::parse("1*0");
  CHECK(prefix_color_permuted(f, Permutation({3, 2, 1})) == 2);  // "0*1"
  for (const char* s : {"10*1", "0*00", "111*"}) {
    StarEdge g = StarEdge::parse(s);
    CHECK(prefix_color_permuted(g, Permutation::identity(4)) == prefix_color(g));
  }
  CHECK_THROWS(prefix_color_permuted(f, Permutation::identity(5)));
}

TEST_CASE("hypercube and edge layer graphs") {
  Graph q3 = hypercube_graph(3);
  CHECK(q3.vertex_count() == 8);
  CHECK(q3.edge_count() == 12);

  EdgeLayerGraph l32 = edge_layer_graph(3, 2);
  CHECK(l32.graph.vertex_count() == 6);
  CHECK(l32.graph.edge_count() == 6);  // 2 * C(3,2)

  // direct enumeration oracle for n=5, k=3
  EdgeLayerGraph l53 = edge_layer_graph(5, 3);
  int expect = 0;
  for (VertexMask m = 0; m < 32; ++m)
    if (mask_layer(m) == 3) expect += 3;  // each 3-set has 3 downward edges
  CHECK(l53.graph.edge_count() == expect);
  CHECK(expect == 30);

  CHECK_THROWS(edge_layer_graph(3, 4));
  CHECK_THROWS(edge_layer_graph(3, -1));
  CHECK(edge_layer_graph(3, 0).graph.vertex_count() == 1);
}

TEST_CASE("hamming is a metric on Q5, exhaustively") {
  const int n = 5;
  std::vector<HypercubeVertex> verts;
  for (VertexMask m = 0; m < 32; ++m) {
    std::vector<int> elems;
    for (int i = 1; i <= n; ++i)
      if (m >> (i - 1) & 1) elems.push_back(i);
    verts.emplace_back(n, elems);
  }
  for (const auto& a : verts)
    for (const auto& b : verts) {
      CHECK(a.hamming(b) == b.hamming(a));
      CHECK((a.hamming(b) == 0) == (a == b));
      for (const auto& c : verts)
        CHECK(a.hamming(c) <= a.hamming(b) + b.hamming(c));
    }
}

TEST_CASE("dimension mismatch is an error") {
  CHECK_THROWS(HypercubeVertex(3).hamming(HypercubeVertex(4)));
}
