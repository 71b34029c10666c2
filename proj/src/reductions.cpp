#include "paracount/reductions.hpp"

#include <map>
#include <set>
#include <string>

namespace paracount {

ReachInstance reduce_hom_to_reach(std::size_t n, const RelationalStructure& b, std::uint64_t k) {
  HomReachGraph layered = build_hom_reach_graph(n, b);
  if (n > k) return ReachInstance{DirectedGraph::create(2, {}), 0, 1, 2};
  return ReachInstance{std::move(layered.graph), layered.s, layered.t, layered.walk_vertices};
}

HomTarget reduce_reach_colour_to_hom(const VertexColouring& vc, Vertex s, Vertex t,
                                     std::uint64_t k) {
  const DirectedGraph& g = vc.graph();
  require_vertex(g, s);
  require_vertex(g, t);
  if (k < 2) fail("side-condition-violated", "k = " + std::to_string(k) + " but P_k needs k >= 2");
  if (vc.colour(s) != 1) fail("side-condition-violated", "colour(s) != 1");
  if (vc.colour(t) != vc.colour_count() || vc.colour_count() != k) {
    fail("side-condition-violated", "need colour(t) = m = k");
  }

  std::map<std::string, std::vector<Tuple>> interpretation;
  auto& edges = interpretation["E"];
  std::set<Tuple> symmetric;
  for (const Edge& e : g.edges()) {
    if (vc.colour(e.target) != vc.colour(e.source) + 1) continue;
    symmetric.insert({e.source, e.target});
    symmetric.insert({e.target, e.source});
  }
  edges.assign(symmetric.begin(), symmetric.end());
  for (std::uint64_t i = 1; i <= k; ++i) interpretation["C" + std::to_string(i)];
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    const std::uint32_t c = vc.colour(v);
    if ((c == 1 && v != s) || (c == k && v != t)) continue;
    interpretation["C" + std::to_string(c)].push_back({v});
  }
  return HomTarget{make_path_star(k),
                   RelationalStructure::create(path_star_vocabulary(k), g.vertex_count(),
                                               interpretation, {}),
                   k};
}

McInstance reduce_reach_to_mc(const DirectedGraph& g, Vertex s, Vertex t, std::uint64_t k) {
  require_vertex(g, s);
  require_vertex(g, t);
  if (k < 2) fail("invalid-argument", "phi_k needs k >= 2, got " + std::to_string(k));
  auto x = [](std::uint64_t i) { return Term::var("x" + std::to_string(i)); };
  std::vector<QFFormula> parts{QFFormula::equality(x(1), Term::constant("s"))};
  for (std::uint64_t i = 1; i < k; ++i) parts.push_back(QFFormula::atom("E", {x(i), x(i + 1)}));
  parts.push_back(QFFormula::equality(x(k), Term::constant("t")));
  QFFormula phi = QFFormula::conjunction(parts);

  std::vector<Tuple> tuples;
  for (const Edge& e : g.edges()) tuples.push_back({e.source, e.target});
  RelationalStructure structure = RelationalStructure::create(
      Vocabulary::create({{"E", 2}}, {"s", "t"}), g.vertex_count(), {{"E", tuples}},
      {{"s", s}, {"t", t}});
  const std::uint64_t size = formula_size(phi);
  return McInstance{std::move(phi), std::move(structure), size};
}

PdetInstance reduce_reach_to_pdet(const DirectedGraph& g, Vertex s, Vertex t, std::uint64_t k) {
  require_vertex(g, s);
  require_vertex(g, t);
  if (!g.is_acyclic()) fail("not-a-dag", "graph has a directed cycle");
  if (s == t) fail("s-equals-t", "the back edge would be a self-loop");
  const std::size_t n = g.vertex_count();
  if (k < 1 || k > n) {
    fail("k-out-of-range", "need 1 <= k <= n = " + std::to_string(n) + ", got " + std::to_string(k));
  }
  std::vector<std::vector<int>> rows(n, std::vector<int>(n, 0));
  for (const Edge& e : g.edges()) rows[e.source][e.target] = 1;
  rows[t][s] = 1;
  const int sign = (2 * n - k + 1) % 2 == 0 ? 1 : -1;
  return PdetInstance{ZeroOneMatrix::create(rows), k, sign};
}

Reduction<HomInstance, ReachInstance> hom_to_reach_reduction() {
  return {{"hom-to-reach", "p-#Hom(P*)", "p-#Reach", "n+2"},
          [](const HomInstance& in) { return reduce_hom_to_reach(in.n, in.target, in.k); },
          [](const HomInstance& in) { return static_cast<std::uint64_t>(in.n) + 2; },
          [](const ReachInstance& out) { return out.k; }};
}

Reduction<ReachColourInstance, HomTarget> reach_colour_to_hom_reduction() {
  return {{"reachcolour-to-hom", "p-#Reach^colour", "p-#Hom(P*)", "k"},
          [](const ReachColourInstance& in) {
            return reduce_reach_colour_to_hom(in.colouring, in.s, in.t, in.k);
          },
          [](const ReachColourInstance& in) { return in.k; },
          [](const HomTarget& out) { return out.k; }};
}

Reduction<ReachInstance, McInstance> reach_to_mc_reduction() {
  return {{"reach-to-mc", "p-#Reach", "p-#MC(Sigma0)", "2k"},
          [](const ReachInstance& in) { return reduce_reach_to_mc(in.graph, in.s, in.t, in.k); },
          [](const ReachInstance& in) { return 2 * in.k; },
          [](const McInstance& out) { return out.k; }};
}

Reduction<ReachInstance, PdetInstance> reach_to_pdet_reduction() {
  return {{"reach-to-pdet", "p-#Reach on DAGs", "pdet", "k"},
          [](const ReachInstance& in) { return reduce_reach_to_pdet(in.graph, in.s, in.t, in.k); },
          [](const ReachInstance& in) { return in.k; },
          [](const PdetInstance& out) { return out.k; }};
}

}  // namespace paracount
