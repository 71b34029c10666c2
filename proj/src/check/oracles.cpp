#include <algorithm>
#include <numeric>

#include "paracount/check.hpp"

namespace paracount::check {

namespace {

constexpr std::uint64_t kOracleLimit = 10'000'000;

std::uint64_t log2_ceiling(std::uint64_t x) {
  std::uint64_t bits = 0;
  while ((std::uint64_t{1} << bits) < std::max<std::uint64_t>(x, 2)) ++bits;
  return bits;
}

std::uint64_t cnf_size(const EdgeCNF& phi) {
  std::uint64_t size = phi.clauses().size();
  for (const Clause& c : phi.clauses()) size += c.size();
  return size;
}

std::vector<bool> traversed(const DirectedGraph& g, const Walk& walk) {
  std::vector<bool> assignment(g.edge_count(), false);
  for (std::size_t i = 0; i + 1 < walk.size(); ++i) {
    assignment[*g.edge_id(walk[i], walk[i + 1])] = true;
  }
  return assignment;
}

}  // namespace

SignedValue determinant_by_permutations(const ZeroOneMatrix& a) {
  const std::size_t n = a.size();
  std::vector<std::size_t> pi(n);
  std::iota(pi.begin(), pi.end(), 0);
  SignedValue total = 0;
  do {
    bool nonzero = true;
    for (std::size_t i = 0; i < n && nonzero; ++i) nonzero = a.at(i, pi[i]);
    if (!nonzero) continue;
    std::size_t inversions = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) inversions += pi[i] > pi[j] ? 1 : 0;
    }
    total += inversions % 2 == 0 ? 1 : -1;
  } while (std::next_permutation(pi.begin(), pi.end()));
  return total;
}

WalkCount reach_oracle(const DirectedGraph& g, Vertex s, Vertex t, std::uint64_t k) {
  if (k == 0) return 0;
  return enumerate_walks(g, s, t, k - 1, kOracleLimit).size();
}

WalkCount log_reach_oracle(const DirectedGraph& g, Vertex s, Vertex t, std::uint64_t a,
                           std::uint64_t k) {
  if (a > k * log2_ceiling(g.vertex_count())) return 0;
  return enumerate_walks(g, s, t, a, kOracleLimit).size();
}

WalkCount log_walk_oracle(const DirectedGraph& g, std::uint64_t a, std::uint64_t k) {
  if (a > k * log2_ceiling(g.vertex_count())) return 0;
  WalkCount total = 0;
  for (Vertex s = 0; s < g.vertex_count(); ++s) {
    for (Vertex t = 0; t < g.vertex_count(); ++t) {
      total += enumerate_walks(g, s, t, a, kOracleLimit).size();
    }
  }
  return total;
}

WalkCount reach_colour_oracle(const VertexColouring& vc, Vertex s, Vertex t, std::uint64_t k) {
  if (k == 0 || vc.colour_count() != k) return 0;
  WalkCount total = 0;
  for (const Walk& w : enumerate_walks(vc.graph(), s, t, k - 1, kOracleLimit)) {
    bool ok = true;
    for (std::size_t i = 0; i < w.size() && ok; ++i) ok = vc.colour(w[i]) == i + 1;
    if (ok) total += 1;
  }
  return total;
}

WalkCount log_reach2_cnf_oracle(const DirectedGraph& g, Vertex s, Vertex t, const EdgeCNF& phi,
                                std::uint64_t a, std::uint64_t k) {
  if (a > k * log2_ceiling(g.vertex_count() + cnf_size(phi))) return 0;
  WalkCount total = 0;
  for (const Walk& w : enumerate_walks(g, s, t, a, kOracleLimit)) {
    if (phi.satisfied_by(traversed(g, w))) total += 1;
  }
  return total;
}

WalkCount cycle_cover2_cnf_oracle(const DirectedGraph& g, const EdgeCNF& phi, std::uint64_t a,
                                  std::uint64_t k) {
  if (a > log2_ceiling(g.vertex_count() + g.edge_count() + cnf_size(phi))) return 0;
  WalkCount total = 0;
  for (const CycleCover& cover : enumerate_cycle_covers(g, kOracleLimit)) {
    std::vector<Vertex> next(g.vertex_count());
    std::vector<bool> assignment(g.edge_count(), false);
    for (EdgeId id : cover.edges) {
      next[g.edge(id).source] = g.edge(id).target;
      assignment[id] = true;
    }
    std::uint64_t cycles = 0;
    std::uint64_t covered = 0;
    std::vector<bool> seen(g.vertex_count(), false);
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      if (seen[v] || next[v] == v) continue;
      ++cycles;
      for (Vertex u = v; !seen[u]; u = next[u]) {
        seen[u] = true;
        ++covered;
      }
    }
    if (cycles <= k && covered == k * a && phi.satisfied_by(assignment)) total += 1;
  }
  return total;
}

WalkCount path_oracle(const DirectedGraph& g, Vertex s, Vertex t, std::uint64_t k) {
  if (k == 0) return 0;
  WalkCount total = 0;
  std::vector<bool> on_path(g.vertex_count(), false);
  std::function<void(Vertex, std::uint64_t)> extend = [&](Vertex v, std::uint64_t used) {
    if (used == k) {
      if (v == t) total += 1;
      return;
    }
    for (Vertex w : g.successors(v)) {
      if (on_path[w]) continue;
      on_path[w] = true;
      extend(w, used + 1);
      on_path[w] = false;
    }
  };
  on_path[s] = true;
  extend(s, 1);
  return total;
}

SignedValue clow_expansion(const ZeroOneMatrix& a, std::uint64_t k,
                           const std::function<SignedValue(const ClowSequence&)>& sign) {
  SignedValue total = 0;
  for (const ClowSequence& w : enumerate_k_clow_sequences(a, k, kOracleLimit)) total += sign(w);
  return total;
}

}  // namespace paracount::check
