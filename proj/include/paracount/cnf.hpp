#pragma once

#include <cstdint>
#include <istream>
#include <map>
#include <vector>

#include "paracount/count.hpp"
#include "paracount/graph.hpp"

namespace paracount {

struct Literal {
  EdgeId edge;
  bool positive;

  friend bool operator==(const Literal&, const Literal&) = default;
};

using Clause = std::vector<Literal>;

/// CNF over the edge variables of a carrier graph. An empty clause is
/// unsatisfiable; a CNF without clauses is always satisfied.
class EdgeCNF {
 public:
  EdgeCNF() = default;

  /// Throws unknown-edge-variable when a literal names an edge id that the
  /// carrier graph does not have.
  static EdgeCNF create(const DirectedGraph& carrier, std::vector<Clause> clauses);

  /// Builds from DIMACS-style signed integers: +i / -i denote edge id i-1.
  static EdgeCNF from_signed(const DirectedGraph& carrier,
                             const std::vector<std::vector<std::int64_t>>& clauses);

  const std::vector<Clause>& clauses() const noexcept { return clauses_; }

  /// Clause count plus literal count.
  std::uint64_t size() const noexcept;

  /// Sorted, deduplicated edge ids that occur in some literal.
  std::vector<EdgeId> variables() const;

  /// Evaluation under a total assignment indexed by edge id.
  bool satisfied_by(const std::vector<bool>& assignment) const;

 private:
  std::vector<Clause> clauses_;
};

/// Standard CNF semantics; throws unassigned-variable when a referenced edge
/// has no value.
bool eval_cnf(const EdgeCNF& phi, const std::map<EdgeId, bool>& assignment);

/// Signed-integer clauses from a DIMACS cnf stream ("p cnf V C" header,
/// comment lines starting with 'c', clauses terminated by 0).
std::vector<std::vector<std::int64_t>> parse_dimacs(std::istream& in);

/// A set of edge ids in which every vertex has exactly one outgoing and one
/// incoming edge. Stored sorted.
struct CycleCover {
  std::vector<EdgeId> edges;

  friend bool operator==(const CycleCover&, const CycleCover&) = default;
  friend auto operator<=>(const CycleCover&, const CycleCover&) = default;
};

/// s-to-t walks with exactly a edges whose traversed-edge set satisfies phi,
/// gated on a <= k*ceil(log2(|V| + |phi|)). Requires out-degree <= 2.
WalkCount count_log_reach2_cnf(const DirectedGraph& g, Vertex s, Vertex t, const EdgeCNF& phi,
                               std::uint64_t a, std::uint64_t k);

/// All cycle covers in lexicographic order of their sorted edge ids.
/// Throws limit-exceeded beyond `limit`.
std::vector<CycleCover> enumerate_cycle_covers(const DirectedGraph& g, std::uint64_t limit);

/// Cycle covers with at most k non-self-loop cycles that cover exactly k*a
/// vertices non-trivially and satisfy phi. Returns 0 when
/// a > ceil(log2(n + |E| + |phi|)). Requires out-degree <= 2.
WalkCount count_cycle_cover2_cnf(const DirectedGraph& g, const EdgeCNF& phi, std::uint64_t a,
                                 std::uint64_t k);

}  // namespace paracount
