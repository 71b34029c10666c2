#include "paracount/walk_count.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include "paracount/error.hpp"

namespace paracount {

namespace {

void require_degree_bound(const DirectedGraph& g, std::uint64_t b) {
  if (b < 2) fail("invalid-argument", "degree bound b must be at least 2");
  const std::size_t degree = max_out_degree(g);
  if (degree > b) {
    fail("degree-bound-violated",
         "max out-degree " + std::to_string(degree) + " exceeds b=" + std::to_string(b));
  }
}

// One step of the guess structure: each vertex guesses j in 1..b and moves
// to its j-th successor if it has one; guesses without a successor die.
std::vector<WalkCount> advance(const DirectedGraph& g, const std::vector<WalkCount>& from,
                               std::uint64_t b) {
  std::vector<WalkCount> to(g.vertex_count(), 0);
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (from[v] == 0) continue;
    auto succ = g.successors(v);
    for (std::uint64_t j = 0; j < b && j < succ.size(); ++j) to[succ[j]] += from[v];
  }
  return to;
}

}  // namespace

bool log_gate_passes(std::uint64_t a, std::uint64_t k, std::uint64_t size_term) {
  const unsigned __int128 bound =
      static_cast<unsigned __int128>(k) * static_cast<unsigned __int128>(ceil_log2(size_term));
  return static_cast<unsigned __int128>(a) <= bound;
}

WalkCount count_reach(const ReachInstance& inst) {
  return count_reach(inst.graph, inst.s, inst.t, inst.k);
}

WalkCount count_reach(const DirectedGraph& g, Vertex s, Vertex t, std::uint64_t k) {
  require_vertex(g, s);
  require_vertex(g, t);
  if (k == 0) return 0;
  std::vector<WalkCount> layer(g.vertex_count(), 0);
  layer[s] = 1;
  const std::uint64_t unbounded = std::max<std::uint64_t>(max_out_degree(g), 1);
  for (std::uint64_t step = 1; step < k; ++step) layer = advance(g, layer, unbounded);
  return layer[t];
}

WalkCount count_log_reach_b(const DirectedGraph& g, Vertex s, Vertex t, std::uint64_t a,
                            std::uint64_t k, std::uint64_t b) {
  require_vertex(g, s);
  require_vertex(g, t);
  require_degree_bound(g, b);
  if (!log_gate_passes(a, k, g.vertex_count())) return 0;
  std::vector<WalkCount> layer(g.vertex_count(), 0);
  layer[s] = 1;
  for (std::uint64_t step = 0; step < a; ++step) layer = advance(g, layer, b);
  return layer[t];
}

WalkCount count_log_walk_b(const DirectedGraph& g, std::uint64_t a, std::uint64_t k,
                           std::uint64_t b) {
  require_degree_bound(g, b);
  if (!log_gate_passes(a, k, g.vertex_count())) return 0;
  // Guessing s up front: every vertex starts with one walk.
  std::vector<WalkCount> layer(g.vertex_count(), 1);
  for (std::uint64_t step = 0; step < a; ++step) layer = advance(g, layer, b);
  WalkCount total = 0;
  for (const auto& c : layer) total += c;
  return total;
}

WalkCount count_reach_colour(const VertexColouring& vc, Vertex s, Vertex t, std::uint64_t k) {
  const DirectedGraph& g = vc.graph();
  require_vertex(g, s);
  require_vertex(g, t);
  if (vc.colour(s) != 1 || vc.colour(t) != vc.colour_count()) {
    fail("colouring-side-condition-violated",
         "need colour(s)=1 and colour(t)=m=" + std::to_string(vc.colour_count()) + ", got " +
             std::to_string(vc.colour(s)) + " and " + std::to_string(vc.colour(t)));
  }
  if (k != vc.colour_count()) return 0;
  std::vector<WalkCount> layer(g.vertex_count(), 0);
  layer[s] = 1;
  for (std::uint64_t position = 2; position <= k; ++position) {
    std::vector<WalkCount> next(g.vertex_count(), 0);
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      if (layer[v] == 0) continue;
      for (Vertex w : g.successors(v)) {
        if (vc.colour(w) == position) next[w] += layer[v];
      }
    }
    layer = std::move(next);
  }
  return layer[t];
}

}  // namespace paracount
