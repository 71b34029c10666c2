#include "doctest.h"
#include "fixtures.hpp"
#include "paracount/check.hpp"

using namespace paracount;
using namespace fixtures;

TEST_SUITE("graph-core") {
  TEST_CASE("create validates endpoints and duplicates") {
    const DirectedGraph g = DirectedGraph::create(2, {{0, 1}});
    CHECK(g.vertex_count() == 2);
    CHECK(g.edge_count() == 1);
    CHECK(g.has_edge(0, 1));
    CHECK_FALSE(g.has_edge(1, 0));
    CHECK(error_name([] { DirectedGraph::create(2, {{0, 2}}); }) == "endpoint-out-of-range");
    CHECK(error_name([] { DirectedGraph::create(1, {{0, 0}, {0, 0}}); }) == "duplicate-edge");
  }

  TEST_CASE("edge ids follow input order and successors are sorted") {
    const DirectedGraph g = DirectedGraph::create(3, {{0, 2}, {1, 2}, {0, 1}});
    CHECK(g.edge_id(0, 1) == EdgeId{2});
    CHECK(g.edge_id(0, 2) == EdgeId{0});
    CHECK_FALSE(g.edge_id(2, 0).has_value());
    const auto succ = g.successors(0);
    REQUIRE(succ.size() == 2);
    CHECK(succ[0] == 1);
    CHECK(succ[1] == 2);
    CHECK(g.out_edges(0)[0] == 2);
  }

  TEST_CASE("acyclicity and degree") {
    CHECK(diamond().is_acyclic());
    CHECK_FALSE(two_vertex_full().is_acyclic());
    CHECK_FALSE(DirectedGraph::create(1, {{0, 0}}).is_acyclic());
    CHECK(max_out_degree(diamond()) == 2);
    CHECK(max_out_degree(DirectedGraph::create(3, {})) == 0);
  }

  TEST_CASE("colouring validation") {
    const VertexColouring vc = VertexColouring::create(path3(), {1, 2, 3});
    CHECK(vc.colour_count() == 3);
    CHECK(error_name([] { VertexColouring::create(path3(), {1, 2}); }) == "bad-colouring");
    CHECK(error_name([] { VertexColouring::create(path3(), {1, 0, 2}); }) == "bad-colouring");
  }

  TEST_CASE("walk_count_matrix examples") {
    const CountMatrix id = walk_count_matrix(diamond(), 0);
    for (std::size_t u = 0; u < 4; ++u) {
      for (std::size_t w = 0; w < 4; ++w) CHECK(id[u][w] == (u == w ? 1 : 0));
    }
    const DirectedGraph cycle = DirectedGraph::create(2, {{0, 1}, {1, 0}});
    CHECK(walk_count_matrix(cycle, 2)[0][0] == 1);
    CHECK(walk_count_matrix(cycle, 3)[0][0] == 0);
    CHECK(walk_count_matrix(diamond(), 2)[0][3] == 2);
  }

  TEST_CASE("walk_count_matrix equals enumeration entrywise") {
    check::Rng rng(3);
    for (int trial = 0; trial < 20; ++trial) {
      const DirectedGraph g = check::random_graph(rng, 5, 0.4, true);
      const CountMatrix m = walk_count_matrix(g, 4);
      for (Vertex u = 0; u < 5; ++u) {
        for (Vertex w = 0; w < 5; ++w) {
          CHECK(m[u][w] == enumerate_walks(g, u, w, 4, 1'000'000).size());
        }
      }
    }
  }

  TEST_CASE("walk matrices compose: W(a+b) = W(a) * W(b)") {
    check::Rng rng(5);
    for (int trial = 0; trial < 20; ++trial) {
      const DirectedGraph g = check::random_graph(rng, 5, 0.5, true);
      for (std::uint64_t a = 0; a <= 3; ++a) {
        for (std::uint64_t b = 0; b <= 3; ++b) {
          CHECK(walk_count_matrix(g, a + b) == multiply(walk_count_matrix(g, a), walk_count_matrix(g, b)));
        }
      }
    }
  }

  TEST_CASE("enumerate_walks examples") {
    CHECK(enumerate_walks(path3(), 0, 2, 2, 100) == std::vector<Walk>{{0, 1, 2}});
    CHECK(enumerate_walks(path3(), 1, 1, 0, 100) == std::vector<Walk>{{1}});
    CHECK(enumerate_walks(diamond(), 0, 3, 2, 100) == std::vector<Walk>{{0, 1, 3}, {0, 2, 3}});
    CHECK(error_name([] { enumerate_walks(diamond(), 0, 3, 2, 1); }) == "limit-exceeded");
    CHECK(error_name([] { enumerate_walks(diamond(), 0, 9, 2, 10); }) == "vertex-out-of-range");
  }
}
