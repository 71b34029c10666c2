#include "doctest.h"
#include "fixtures.hpp"
#include "paracount/check.hpp"
#include "paracount/reductions.hpp"
#include "paracount/walk_count.hpp"

using namespace paracount;
using namespace fixtures;

namespace {

BigInt reach_count(const ReachInstance& in) { return count_reach(in.graph, in.s, in.t, in.k); }

BigInt hom_count(const HomTarget& out) {
  return count_hom_oracle(out.pattern.structure, out.target, 10'000'000);
}

BigInt pdet_value(const PdetInstance& out) { return out.recovery_sign * pdet_direct(out.matrix, out.k); }

}  // namespace

TEST_SUITE("reductions") {
  TEST_CASE("hom-to-reach examples") {
    const RelationalStructure p2 = make_path_star(2).structure;
    const ReachInstance out = reduce_hom_to_reach(2, p2, 2);
    CHECK(out.graph.vertex_count() == 4);
    CHECK(out.k == 4);
    CHECK(reach_count(out) == 1);

    std::map<std::string, std::vector<Tuple>> interp{{"E", {{0, 1}, {1, 0}}}, {"C2", {{1}}}};
    const RelationalStructure no_c1 = RelationalStructure::create(path_star_vocabulary(2), 2, interp, {});
    const ReachInstance dead = reduce_hom_to_reach(2, no_c1, 2);
    CHECK(dead.graph.successors(dead.s).empty());
    CHECK(reach_count(dead) == 0);

    const ReachInstance gated = reduce_hom_to_reach(3, make_path_star(3).structure, 2);
    CHECK(reach_count(gated) == 0);
    CHECK(gated.k <= 5);
  }

  TEST_CASE("reachcolour-to-hom examples") {
    const VertexColouring path = VertexColouring::create(path3(), {1, 2, 3});
    const HomTarget out = reduce_reach_colour_to_hom(path, 0, 2, 3);
    CHECK(out.k == 3);
    CHECK(hom_count(out) == 1);
    CHECK(out.target.relation("E").size() == 4);

    const VertexColouring broken =
        VertexColouring::create(DirectedGraph::create(3, {{0, 2}, {1, 0}}), {1, 2, 3});
    CHECK(hom_count(reduce_reach_colour_to_hom(broken, 0, 2, 3)) == 0);
    CHECK(count_reach_colour(broken, 0, 2, 3) == 0);

    CHECK(error_name([&] { reduce_reach_colour_to_hom(path, 1, 2, 3); }) == "side-condition-violated");
    CHECK(error_name([&] { reduce_reach_colour_to_hom(path, 0, 2, 2); }) == "side-condition-violated");
    const VertexColouring single = VertexColouring::create(DirectedGraph::create(1, {}), {1});
    CHECK(error_name([&] { reduce_reach_colour_to_hom(single, 0, 0, 1); }) == "side-condition-violated");
  }

  TEST_CASE("reach-to-mc examples") {
    const McInstance out = reduce_reach_to_mc(diamond(), 0, 3, 3);
    CHECK(out.k == 5);
    CHECK(count_mc(out.formula, out.structure, out.k) == 2);
    CHECK(locality_radius(out.formula) == 1);
    CHECK(max_arity(out.formula) == 2);

    const McInstance stuck = reduce_reach_to_mc(DirectedGraph::create(3, {{1, 2}}), 0, 2, 2);
    CHECK(count_mc(stuck.formula, stuck.structure, stuck.k) == 0);
    CHECK(error_name([] { reduce_reach_to_mc(diamond(), 0, 3, 1); }) == "invalid-argument");
  }

  TEST_CASE("reach-to-pdet examples") {
    const PdetInstance out = reduce_reach_to_pdet(path3(), 0, 2, 3);
    CHECK(out.recovery_sign == 1);
    CHECK(pdet_direct(out.matrix, 3) == 1);
    CHECK(pdet_value(out) == 1);

    const PdetInstance none = reduce_reach_to_pdet(path3(), 0, 2, 2);
    CHECK(pdet_direct(none.matrix, 2) == 0);

    CHECK(error_name([] { reduce_reach_to_pdet(two_vertex_full(), 0, 1, 2); }) == "not-a-dag");
    CHECK(error_name([] { reduce_reach_to_pdet(path3(), 1, 1, 2); }) == "s-equals-t");
    CHECK(error_name([] { reduce_reach_to_pdet(path3(), 0, 2, 4); }) == "k-out-of-range");
    CHECK(error_name([] { reduce_reach_to_pdet(path3(), 0, 2, 0); }) == "k-out-of-range");
  }

  TEST_CASE("records carry names and bounds") {
    CHECK(hom_to_reach_reduction().record.name == "hom-to-reach");
    CHECK(reach_colour_to_hom_reduction().record.parameter_bound == "k");
    CHECK(reach_to_mc_reduction().record.parameter_bound == "2k");
    CHECK(reach_to_pdet_reduction().record.target_problem == "pdet");
  }

  TEST_CASE("verify_parsimonious passes on the listed examples") {
    const ParsimonyReport mc = verify_parsimonious<ReachInstance, McInstance>(
        reach_to_mc_reduction(), {{diamond(), 0, 3, 3}, {path3(), 0, 2, 3}, {path3(), 2, 0, 2}},
        reach_count, [](const McInstance& out) { return count_mc(out.formula, out.structure, out.k); });
    CHECK(mc.passed());
    CHECK(mc.checked == 3);

    const ParsimonyReport pdet = verify_parsimonious<ReachInstance, PdetInstance>(
        reach_to_pdet_reduction(), {{path3(), 0, 2, 3}, {diamond(), 0, 3, 3}, {diamond(), 0, 3, 2}},
        reach_count, pdet_value);
    CHECK(pdet.passed());
  }

  TEST_CASE("verify_parsimonious detects a corrupted transform") {
    auto mutant = reach_to_pdet_reduction();
    mutant.transform = [](const ReachInstance& in) {
      PdetInstance out = reduce_reach_to_pdet(in.graph, in.s, in.t, in.k);
      out.recovery_sign = -out.recovery_sign;
      return out;
    };
    const ParsimonyReport report = verify_parsimonious<ReachInstance, PdetInstance>(
        mutant, {{diamond(), 0, 3, 3}}, reach_count, pdet_value);
    CHECK_FALSE(report.passed());
    REQUIRE(report.failures.size() == 1);
    CHECK(report.failures[0].instance == 0);

    auto loose = reach_to_mc_reduction();
    loose.parameter_bound = [](const ReachInstance& in) { return in.k; };
    const ParsimonyReport bound = verify_parsimonious<ReachInstance, McInstance>(
        loose, {{diamond(), 0, 3, 3}}, reach_count,
        [](const McInstance& out) { return count_mc(out.formula, out.structure, out.k); });
    CHECK_FALSE(bound.passed());

    const ParsimonyReport raised = verify_parsimonious<ReachInstance, McInstance>(
        reach_to_mc_reduction(), {{diamond(), 0, 3, 1}}, reach_count,
        [](const McInstance& out) { return count_mc(out.formula, out.structure, out.k); });
    CHECK_FALSE(raised.passed());
  }

  TEST_CASE("random batches are parsimonious") {
    check::Rng rng(103);
    std::vector<ReachInstance> reach;
    std::vector<ReachInstance> dags;
    std::vector<ReachColourInstance> colour;
    for (int i = 0; i < 100; ++i) {
      const std::size_t n = check::uniform(rng, 1, 6);
      reach.push_back({check::random_graph(rng, n, 0.4, true), static_cast<Vertex>(check::uniform(rng, 0, n - 1)),
                       static_cast<Vertex>(check::uniform(rng, 0, n - 1)), check::uniform(rng, 2, 5)});
      const std::size_t dn = check::uniform(rng, 2, 6);
      dags.push_back({check::random_dag(rng, dn, 0.5), 0, static_cast<Vertex>(dn - 1),
                      check::uniform(rng, 1, std::min<std::uint64_t>(5, dn))});
      const std::uint64_t m = check::uniform(rng, 2, 4);
      check::ColouredInstance ci = check::random_coloured(rng, check::uniform(rng, m, 6), m);
      colour.push_back({std::move(ci.colouring), ci.s, ci.t, m});
    }
    CHECK(verify_parsimonious<ReachInstance, McInstance>(
              reach_to_mc_reduction(), reach, reach_count,
              [](const McInstance& out) { return count_mc(out.formula, out.structure, out.k); })
              .passed());
    CHECK(verify_parsimonious<ReachInstance, PdetInstance>(reach_to_pdet_reduction(), dags, reach_count,
                                                           pdet_value)
              .passed());
    CHECK(verify_parsimonious<ReachColourInstance, HomTarget>(
              reach_colour_to_hom_reduction(), colour,
              [](const ReachColourInstance& in) { return count_reach_colour(in.colouring, in.s, in.t, in.k); },
              hom_count)
              .passed());
  }
}
