#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <sstream>

#include "hcube/cube.hpp"
#include "hcube/gallery.hpp"
#include "hcube/graph.hpp"
#include "hcube/subdivision.hpp"
#include "test_util.hpp"

using namespace hcube;

namespace {

Graph cycle_graph(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return Graph(n, std::move(edges));
}

Graph path_graph(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph(n, std::move(edges));
}

}  // namespace

TEST_CASE("construction rejects loops and duplicates") {
  CHECK_THROWS_WITH_AS(Graph(3, {{0, 0}}), doctest::Contains("loop"),
                       std::invalid_argument);
  CHECK_THROWS_WITH_AS(Graph(3, {{0, 1}, {1, 0}}), doctest::Contains("duplicate"),
                       std::invalid_argument);
  CHECK_THROWS(Graph(2, {{0, 5}}));
}

TEST_CASE("girth") {
  CHECK(girth(cycle_graph(6)) == 6);
  CHECK(!girth(path_graph(5)).has_value());
  CHECK(girth(hypercube_graph(3)) == 4);
  CHECK(girth(complete_graph(4)) == 3);
  CHECK(girth(g8().graph) == 8);
}

TEST_CASE("cycle basis dimensions") {
  CHECK(cycle_basis(cycle_graph(6)).fundamental_cycles.size() == 1);
  CHECK(cycle_basis(cycle_graph(6)).fundamental_cycles[0].size() == 6);
  CHECK(cycle_basis(hypercube_graph(3)).fundamental_cycles.size() == 5);
  CHECK(cycle_basis(complete_graph(4)).fundamental_cycles.size() == 3);

  // each fundamental cycle is a closed even-degree edge set
  Graph q3 = hypercube_graph(3);
  for (const auto& cyc : cycle_basis(q3).fundamental_cycles) {
    std::vector<int> deg(q3.vertex_count(), 0);
    for (int e : cyc) {
      deg[q3.edge(e).first] += 1;
      deg[q3.edge(e).second] += 1;
    }
    for (int d : deg) CHECK(d % 2 == 0);
  }
}

TEST_CASE("cycles_of_length agrees with the permutation oracle") {
  Graph q3 = hypercube_graph(3);
  auto got4 = cycles_of_length(q3, 4);
  CHECK(got4.size() == 6);  // the six faces
  auto got6 = cycles_of_length(q3, 6);
  CHECK(got6.size() == 16);

  auto oracle4 = testutil::cycles_by_permutation(q3, 4);
  auto oracle6 = testutil::cycles_by_permutation(q3, 6);
  CHECK(std::set<std::vector<int>>(got4.begin(), got4.end()) == oracle4);
  CHECK(std::set<std::vector<int>>(got6.begin(), got6.end()) == oracle6);

  CHECK(cycles_of_length(cycle_graph(10), 10).size() == 1);
  CHECK(cycles_of_length(cycle_graph(10), 9).empty());
}

TEST_CASE("canonical uniqueness under rotation and reflection") {
  Graph q3 = hypercube_graph(3);
  auto cycles = cycles_of_length(q3, 6);
  std::set<std::vector<int>> reported(cycles.begin(), cycles.end());
  std::mt19937_64 rng(11);
  for (const auto& cyc : cycles) {
    std::vector<int> rotated = cyc;
    std::rotate(rotated.begin(), rotated.begin() + rng() % 6, rotated.end());
    if (rng() % 2) std::reverse(rotated.begin(), rotated.end());
    CHECK(reported.count(canonical_cycle(rotated)) == 1);
  }
}

TEST_CASE("every short cycle lies in the GF(2) span of the fundamental cycles") {
  std::vector<Graph> graphs{g8().graph, theta({3, 3, 3}).graph, complete_graph(4),
                            hypercube_graph(3)};
  for (const auto& g : graphs) {
    auto basis = cycle_basis(g).fundamental_cycles;
    for (int L = 3; L <= 8; ++L)
      for (const auto& cyc : cycles_of_length(g, L)) {
        std::vector<int> edges;
        for (int i = 0; i < L; ++i)
          edges.push_back(g.find_edge(cyc[i], cyc[(i + 1) % L]));
        CHECK(testutil::in_gf2_span(basis, edges, g.edge_count()));
      }
  }
}

TEST_CASE("json round trip") {
  Graph c6(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}},
           {"a", "b", "c", "d", "e", "f"});
  std::string text = graph_to_json(c6);
  std::istringstream in(text);
  Graph back = load_graph(in, "<test>");
  CHECK(back.vertex_count() == 6);
  CHECK(back.edges() == c6.edges());
  CHECK(back.labels() == c6.labels());
}

TEST_CASE("load_graph errors carry the origin") {
  std::istringstream bad("{\"vertices\": 2, \"edges\": [[0,0]]}");
  CHECK_THROWS_WITH_AS(load_graph(bad, "input.json"), doctest::Contains("input.json"),
                       std::runtime_error);
  std::istringstream dup("{\"vertices\": 3, \"edges\": [[0,1],[1,0]]}");
  CHECK_THROWS_WITH_AS(load_graph(dup, "x"), doctest::Contains("duplicate"),
                       std::runtime_error);
  std::istringstream junk("not json");
  CHECK_THROWS(load_graph(junk, "y"));
}

TEST_CASE("dot export includes labels") {
  Graph g(2, {{0, 1}}, {"lo", "hi"});
  std::string dot = to_dot(g);
  CHECK(dot.find("label=\"lo\"") != std::string::npos);
  CHECK(dot.find("0 -- 1") != std::string::npos);
}

TEST_CASE("components and relabeling") {
  Graph two(5, {{0, 1}, {2, 3}, {3, 4}});
  CHECK(two.components().size() == 2);
  CHECK(!two.connected());
  std::mt19937_64 rng(3);
  auto perm = testutil::random_relabeling(5, rng);
  Graph rel = two.relabeled(perm);
  CHECK(rel.edge_count() == two.edge_count());
  CHECK(rel.components().size() == 2);
}

TEST_CASE("bfs distances") {
  Graph c6 = cycle_graph(6);
  auto d = c6.bfs_distances(0);
  CHECK(d[3] == 3);
  CHECK(d[5] == 1);
}
