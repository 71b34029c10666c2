#include <sstream>

#include "doctest.h"
#include "fixtures.hpp"
#include "paracount/check.hpp"
#include "paracount/cnf.hpp"
#include "paracount/walk_count.hpp"

using namespace paracount;
using namespace fixtures;

TEST_SUITE("cnf-count") {
  TEST_CASE("eval_cnf examples") {
    const DirectedGraph g = diamond();
    CHECK(eval_cnf(EdgeCNF::create(g, {}), {}));
    CHECK_FALSE(eval_cnf(EdgeCNF::create(g, {{{0, false}}}), {{0, true}}));
    CHECK(eval_cnf(EdgeCNF::create(g, {{{0, true}, {1, true}}, {{0, false}}}), {{0, false}, {1, true}}));
    CHECK_FALSE(eval_cnf(EdgeCNF::create(g, {{}}), {}));
    CHECK(error_name([&] { eval_cnf(EdgeCNF::create(g, {{{2, true}}}), {{0, true}}); }) ==
          "unassigned-variable");
  }

  TEST_CASE("construction and DIMACS input") {
    const DirectedGraph g = diamond();
    CHECK(error_name([&] { EdgeCNF::create(g, {{{4, true}}}); }) == "unknown-edge-variable");
    CHECK(error_name([&] { EdgeCNF::from_signed(g, {{5}}); }) == "unknown-edge-variable");
    CHECK(error_name([&] { EdgeCNF::from_signed(g, {{0}}); }) == "unknown-edge-variable");
    const EdgeCNF phi = EdgeCNF::from_signed(g, {{1, -2}, {4}});
    CHECK(phi.clauses()[0] == Clause{{0, true}, {1, false}});
    CHECK(phi.size() == 5);
    CHECK(phi.variables() == std::vector<EdgeId>{0, 1, 3});

    std::istringstream text("c comment\np cnf 4 2\n1 -2 0\n4 0\n");
    CHECK(parse_dimacs(text) == std::vector<std::vector<std::int64_t>>{{1, -2}, {4}});
    std::istringstream headless("1 0\n");
    CHECK(error_name([&] { parse_dimacs(headless); }) == "parse-error");
  }

  TEST_CASE("count_log_reach2_cnf examples") {
    const DirectedGraph g = diamond();
    const EdgeCNF empty = EdgeCNF::create(g, {});
    CHECK(count_log_reach2_cnf(g, 0, 3, empty, 2, 1) == count_log_reach_b(g, 0, 3, 2, 1, 2));
    const auto e01 = *g.edge_id(0, 1);
    CHECK(count_log_reach2_cnf(g, 0, 3, EdgeCNF::create(g, {{{e01, false}}}), 2, 1) == 1);
    CHECK(count_log_reach2_cnf(g, 0, 3, empty, 2, 0) == 0);
    const DirectedGraph star = DirectedGraph::create(4, {{0, 1}, {0, 2}, {0, 3}});
    CHECK(error_name([&] { count_log_reach2_cnf(star, 0, 1, EdgeCNF::create(star, {}), 1, 2); }) ==
          "degree-bound-violated");
  }

  TEST_CASE("enumerate_cycle_covers examples") {
    const DirectedGraph g = two_vertex_full();
    const auto covers = enumerate_cycle_covers(g, 100);
    REQUIRE(covers.size() == 2);
    CHECK(covers[0] == CycleCover{{0, 1}});
    CHECK(covers[1] == CycleCover{{2, 3}});
    CHECK(enumerate_cycle_covers(DirectedGraph::create(1, {{0, 0}}), 100).size() == 1);
    CHECK(enumerate_cycle_covers(DirectedGraph::create(1, {}), 100).empty());
    CHECK(error_name([&] { enumerate_cycle_covers(g, 1); }) == "limit-exceeded");
  }

  TEST_CASE("count_cycle_cover2_cnf examples") {
    const DirectedGraph g = two_vertex_full();
    const EdgeCNF empty = EdgeCNF::create(g, {});
    CHECK(count_cycle_cover2_cnf(g, empty, 2, 1) == 1);
    CHECK(count_cycle_cover2_cnf(g, empty, 2, 0) == 1);
    CHECK(count_cycle_cover2_cnf(g, EdgeCNF::create(g, {{}}), 2, 1) == 0);
    CHECK(count_cycle_cover2_cnf(g, empty, 4, 1) == 0);
  }

  TEST_CASE("cycle covers partition the vertices") {
    check::Rng rng(41);
    for (int trial = 0; trial < 40; ++trial) {
      const std::size_t n = check::uniform(rng, 1, 6);
      const DirectedGraph g = check::random_bounded_graph(rng, n, 2, true);
      const auto covers = enumerate_cycle_covers(g, 100'000);
      for (const CycleCover& cover : covers) {
        CHECK(cover.edges.size() == n);
        std::vector<int> out(n, 0), in(n, 0);
        for (EdgeId id : cover.edges) {
          ++out[g.edge(id).source];
          ++in[g.edge(id).target];
        }
        for (std::size_t v = 0; v < n; ++v) {
          CHECK(out[v] == 1);
          CHECK(in[v] == 1);
        }
      }
      // For fixed k, distinct a select disjoint sets of covers.
      for (std::uint64_t k = 1; k <= n; ++k) {
        BigInt total = 0;
        for (std::uint64_t a = 1; a * k <= n; ++a) {
          total += count_cycle_cover2_cnf(g, EdgeCNF::create(g, {}), a, k);
        }
        CHECK(total <= covers.size());
      }
    }
  }

  TEST_CASE("empty CNF reduces to the unconstrained counters") {
    check::Rng rng(43);
    for (int trial = 0; trial < 40; ++trial) {
      const std::size_t n = check::uniform(rng, 1, 6);
      const DirectedGraph g = check::random_bounded_graph(rng, n, 2, true);
      const auto s = static_cast<Vertex>(check::uniform(rng, 0, n - 1));
      const auto t = static_cast<Vertex>(check::uniform(rng, 0, n - 1));
      const std::uint64_t a = check::uniform(rng, 0, 4);
      const std::uint64_t k = check::uniform(rng, 0, 3);
      CHECK(count_log_reach2_cnf(g, s, t, EdgeCNF::create(g, {}), a, k) ==
            count_log_reach_b(g, s, t, a, k, 2));
    }
  }

  TEST_CASE("random instances agree with enumerate-then-filter") {
    check::Rng rng(47);
    for (int trial = 0; trial < 60; ++trial) {
      const std::size_t n = check::uniform(rng, 1, 6);
      const DirectedGraph g = check::random_bounded_graph(rng, n, 2, true);
      const EdgeCNF phi = check::random_cnf(rng, g, 3);
      const auto s = static_cast<Vertex>(check::uniform(rng, 0, n - 1));
      const auto t = static_cast<Vertex>(check::uniform(rng, 0, n - 1));
      const std::uint64_t a = check::uniform(rng, 0, 4);
      const std::uint64_t k = check::uniform(rng, 0, 3);
      CHECK(count_log_reach2_cnf(g, s, t, phi, a, k) == check::log_reach2_cnf_oracle(g, s, t, phi, a, k));
      CHECK(count_cycle_cover2_cnf(g, phi, a, k) == check::cycle_cover2_cnf_oracle(g, phi, a, k));
    }
  }
}
