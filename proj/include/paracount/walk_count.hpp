#pragma once

#include <cstdint>

#include "paracount/count.hpp"
#include "paracount/graph.hpp"

namespace paracount {

// Length conventions: count_reach and count_reach_colour measure a walk by
// its number of VERTICES (k vertices, k-1 edges); the logarithmic variants
// measure it by its number of EDGES.

struct ReachInstance {
  DirectedGraph graph;
  Vertex s = 0;
  Vertex t = 0;
  std::uint64_t k = 0;
};

/// a <= k * ceil(log2(max(size_term, 2))).
bool log_gate_passes(std::uint64_t a, std::uint64_t k, std::uint64_t size_term);

/// Number of walks (v_1..v_k) with v_1 = s and v_k = t. k = 0 yields 0.
WalkCount count_reach(const ReachInstance& inst);
WalkCount count_reach(const DirectedGraph& g, Vertex s, Vertex t, std::uint64_t k);

/// s-to-t walks with exactly a edges, gated on a <= k*ceil(log2 |V|).
/// Requires b >= 2 and max out-degree <= b (degree-bound-violated).
WalkCount count_log_reach_b(const DirectedGraph& g, Vertex s, Vertex t, std::uint64_t a,
                            std::uint64_t k, std::uint64_t b);

/// All walks with exactly a edges, same gate and degree bound.
WalkCount count_log_walk_b(const DirectedGraph& g, std::uint64_t a, std::uint64_t k,
                           std::uint64_t b);

/// Walks (s = v_1..v_k = t) with colour(v_i) = i. Returns 0 when m != k.
/// Throws colouring-side-condition-violated if colour(s) != 1 or
/// colour(t) != m.
WalkCount count_reach_colour(const VertexColouring& vc, Vertex s, Vertex t, std::uint64_t k);

}  // namespace paracount
