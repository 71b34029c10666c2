#include "doctest.h"
#include "fixtures.hpp"
#include "paracount/check.hpp"
#include "paracount/walk_count.hpp"

using namespace paracount;
using namespace fixtures;

namespace {

DirectedGraph disjoint_union(const DirectedGraph& a, const DirectedGraph& b) {
  std::vector<Edge> edges = a.edges();
  const auto shift = static_cast<Vertex>(a.vertex_count());
  for (const Edge& e : b.edges()) edges.push_back({e.source + shift, e.target + shift});
  return DirectedGraph::create(a.vertex_count() + b.vertex_count(), std::move(edges));
}

}  // namespace

TEST_SUITE("walk-count") {
  TEST_CASE("log gate") {
    CHECK(ceil_log2(0) == 1);
    CHECK(ceil_log2(2) == 1);
    CHECK(ceil_log2(4) == 2);
    CHECK(ceil_log2(5) == 3);
    CHECK(log_gate_passes(2, 1, 4));
    CHECK_FALSE(log_gate_passes(3, 1, 4));
    CHECK(log_gate_passes(0, 0, 1));
  }

  TEST_CASE("count_reach examples") {
    CHECK(count_reach(diamond(), 0, 3, 3) == 2);
    for (Vertex v = 0; v < 4; ++v) CHECK(count_reach(diamond(), v, v, 1) == 1);
    CHECK(count_reach(diamond(), 0, 3, 0) == 0);
    CHECK(count_reach(ReachInstance{diamond(), 0, 3, 3}) == 2);
    CHECK(error_name([] { count_reach(diamond(), 0, 4, 2); }) == "vertex-out-of-range");
  }

  TEST_CASE("count_log_reach_b examples") {
    CHECK(count_log_reach_b(diamond(), 0, 3, 2, 1, 2) == 2);
    CHECK(count_log_reach_b(diamond(), 0, 3, 2, 0, 2) == 0);
    CHECK(error_name([] { count_log_reach_b(diamond(), 0, 3, 2, 1, 1); }) == "invalid-argument");
    const DirectedGraph star = DirectedGraph::create(4, {{0, 1}, {0, 2}, {0, 3}});
    CHECK(error_name([&] { count_log_reach_b(star, 0, 1, 1, 1, 2); }) == "degree-bound-violated");
    CHECK(count_log_reach_b(star, 0, 1, 1, 1, 3) == 1);
  }

  TEST_CASE("count_log_walk_b examples") {
    CHECK(count_log_walk_b(path3(), 1, 5, 2) == 2);
    CHECK(count_log_walk_b(path3(), 2, 5, 2) == 1);
    CHECK(count_log_walk_b(path3(), 2, 0, 2) == 0);
  }

  TEST_CASE("count_reach_colour examples") {
    const VertexColouring vc = VertexColouring::create(path3(), {1, 2, 3});
    CHECK(count_reach_colour(vc, 0, 2, 3) == 1);
    CHECK(count_reach_colour(vc, 0, 2, 2) == 0);
    CHECK(error_name([&] { count_reach_colour(vc, 1, 2, 3); }) == "colouring-side-condition-violated");
    CHECK(error_name([&] { count_reach_colour(vc, 0, 1, 3); }) == "colouring-side-condition-violated");
  }

  TEST_CASE("random instances agree with the matrix power and enumeration") {
    check::Rng rng(17);
    for (int trial = 0; trial < 40; ++trial) {
      const DirectedGraph g = check::random_bounded_graph(rng, 8, 2, true);
      const auto s = static_cast<Vertex>(check::uniform(rng, 0, 7));
      const auto t = static_cast<Vertex>(check::uniform(rng, 0, 7));
      const CountMatrix m5 = walk_count_matrix(g, 5);
      CHECK(count_log_reach_b(g, s, t, 5, 3, 2) == m5[s][t]);
      BigInt total = 0;
      for (const auto& row : walk_count_matrix(g, 4)) {
        for (const BigInt& entry : row) total += entry;
      }
      CHECK(count_log_walk_b(g, 4, 3, 2) == total);
      CHECK(count_reach(g, s, t, 5) == enumerate_walks(g, s, t, 4, 1'000'000).size());
    }
  }

  TEST_CASE("count_reach satisfies the last-edge recurrence") {
    check::Rng rng(19);
    for (int trial = 0; trial < 30; ++trial) {
      const DirectedGraph g = check::random_graph(rng, 6, 0.4, true);
      const auto s = static_cast<Vertex>(check::uniform(rng, 0, 5));
      const auto t = static_cast<Vertex>(check::uniform(rng, 0, 5));
      for (std::uint64_t k = 2; k <= 6; ++k) {
        BigInt expected = 0;
        for (Vertex u = 0; u < 6; ++u) {
          if (g.has_edge(u, t)) expected += count_reach(g, s, u, k - 1);
        }
        CHECK(count_reach(g, s, t, k) == expected);
      }
    }
  }

  TEST_CASE("walks in a DAG are paths") {
    check::Rng rng(23);
    for (int trial = 0; trial < 30; ++trial) {
      const DirectedGraph g = check::random_dag(rng, 6, 0.5);
      for (std::uint64_t k = 1; k <= 6; ++k) {
        CHECK(count_reach(g, 0, 5, k) == check::path_oracle(g, 0, 5, k));
      }
    }
  }

  TEST_CASE("log walks are the sum of log reach over endpoints") {
    check::Rng rng(29);
    for (int trial = 0; trial < 30; ++trial) {
      const std::size_t n = check::uniform(rng, 1, 6);
      const DirectedGraph g = check::random_bounded_graph(rng, n, 2, true);
      const std::uint64_t a = check::uniform(rng, 0, 5);
      const std::uint64_t k = check::uniform(rng, 0, 4);
      BigInt sum = 0;
      for (Vertex s = 0; s < n; ++s) {
        for (Vertex t = 0; t < n; ++t) sum += count_log_reach_b(g, s, t, a, k, 2);
      }
      CHECK(count_log_walk_b(g, a, k, 2) == sum);
    }
  }

  TEST_CASE("raising k never closes the gate") {
    check::Rng rng(31);
    for (int trial = 0; trial < 30; ++trial) {
      const DirectedGraph g = check::random_bounded_graph(rng, 5, 2, true);
      const std::uint64_t a = check::uniform(rng, 0, 8);
      BigInt previous = 0;
      for (std::uint64_t k = 0; k <= 8; ++k) {
        const BigInt now = count_log_walk_b(g, a, k, 2);
        CHECK((previous == 0 || now == previous));
        previous = now;
        if (log_gate_passes(a, k, 5)) CHECK(log_gate_passes(a, k + 1, 5));
      }
    }
  }

  TEST_CASE("counts within one side of a disjoint union are unchanged") {
    check::Rng rng(37);
    for (int trial = 0; trial < 20; ++trial) {
      const DirectedGraph a = check::random_graph(rng, 4, 0.5, true);
      const DirectedGraph b = check::random_graph(rng, 3, 0.5, true);
      const DirectedGraph u = disjoint_union(a, b);
      for (std::uint64_t k = 1; k <= 5; ++k) {
        CHECK(count_reach(u, 0, 3, k) == count_reach(a, 0, 3, k));
        CHECK(count_reach(u, 4, 6, k) == count_reach(b, 0, 2, k));
        CHECK(count_reach(u, 0, 6, k) == 0);
      }
      const CountMatrix ua = walk_count_matrix(u, 3);
      BigInt sum_u = 0, sum_parts = 0;
      for (const auto& row : ua) {
        for (const BigInt& e : row) sum_u += e;
      }
      for (const auto* part : {&a, &b}) {
        for (const auto& row : walk_count_matrix(*part, 3)) {
          for (const BigInt& e : row) sum_parts += e;
        }
      }
      CHECK(sum_u == sum_parts);
    }
  }
}
