#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "paracount/bp.hpp"
#include "paracount/cnf.hpp"
#include "paracount/count.hpp"
#include "paracount/fo.hpp"
#include "paracount/graph.hpp"
#include "paracount/hom.hpp"
#include "paracount/pdet.hpp"
#include "paracount/reductions.hpp"

// Independent oracles, random instance generators and the cross-oracle
// property suites shared by `paracount selftest` and the acceptance tests.
namespace paracount::check {

using Rng = std::mt19937_64;

// ---- oracles -------------------------------------------------------------

/// Sum over all n! permutations of sign(pi) * prod a_{i,pi(i)}.
SignedValue determinant_by_permutations(const ZeroOneMatrix& a);

/// Walk counters recomputed by exhaustive walk enumeration, with the gates
/// re-derived from the problem definitions.
WalkCount reach_oracle(const DirectedGraph& g, Vertex s, Vertex t, std::uint64_t k);
WalkCount log_reach_oracle(const DirectedGraph& g, Vertex s, Vertex t, std::uint64_t a,
                           std::uint64_t k);
WalkCount log_walk_oracle(const DirectedGraph& g, std::uint64_t a, std::uint64_t k);
WalkCount reach_colour_oracle(const VertexColouring& vc, Vertex s, Vertex t, std::uint64_t k);
WalkCount log_reach2_cnf_oracle(const DirectedGraph& g, Vertex s, Vertex t, const EdgeCNF& phi,
                                std::uint64_t a, std::uint64_t k);
WalkCount cycle_cover2_cnf_oracle(const DirectedGraph& g, const EdgeCNF& phi, std::uint64_t a,
                                  std::uint64_t k);

/// Number of simple paths with k vertices from s to t.
WalkCount path_oracle(const DirectedGraph& g, Vertex s, Vertex t, std::uint64_t k);

/// sum over enumerated k-clow sequences of sign(W), with the sign supplied
/// by the caller (clow_sign in production, a mutant in sensitivity tests).
SignedValue clow_expansion(const ZeroOneMatrix& a, std::uint64_t k,
                           const std::function<SignedValue(const ClowSequence&)>& sign);

// ---- generators ----------------------------------------------------------

std::uint64_t uniform(Rng& rng, std::uint64_t lo, std::uint64_t hi);  // inclusive
bool coin(Rng& rng, double p);

DirectedGraph random_graph(Rng& rng, std::size_t n, double density, bool loops);
/// Edges only from smaller to larger index.
DirectedGraph random_dag(Rng& rng, std::size_t n, double density);
/// Every vertex gets at most `b` successors.
DirectedGraph random_bounded_graph(Rng& rng, std::size_t n, std::size_t b, bool loops);
ZeroOneMatrix random_matrix(Rng& rng, std::size_t n, double density);
ZeroOneMatrix random_unit_diagonal_matrix(Rng& rng, std::size_t n, double density);
/// Clauses over the graph's edge ids; occasionally includes an empty clause.
EdgeCNF random_cnf(Rng& rng, const DirectedGraph& g, std::size_t max_clauses);

struct ColouredInstance {
  VertexColouring colouring;
  Vertex s = 0;
  Vertex t = 0;
  std::uint64_t m = 0;
};
/// colour(s) = 1 and colour(t) = m; edges biased towards colour steps of +1.
ColouredInstance random_coloured(Rng& rng, std::size_t n, std::uint64_t m);

struct LocalFormula {
  QFFormula formula;
  RelationalStructure structure;
  std::uint64_t r = 0;
};
/// Formula over E/2, U/1 and constant c with locality <= r and at most
/// `max_vars` variables, plus a random structure over universe 1..5.
LocalFormula random_local_formula(Rng& rng, std::uint64_t r, std::size_t max_vars);

/// Structure over (E, C1..Cn) with `universe` elements; colour classes may
/// be empty or overlap.
RelationalStructure random_hom_target(Rng& rng, std::size_t n, std::size_t universe);

/// Program that is deterministic given y and reads y indices in strictly
/// increasing order along every path. Up to 5 layers.
BranchingProgram random_ordered_bp(Rng& rng, std::uint32_t num_x, std::uint32_t num_y);

std::vector<std::vector<bool>> all_bit_strings(std::size_t width);

// ---- property suites -----------------------------------------------------

enum class Scale { Smoke, Full };

struct PropertyResult {
  int criterion = 0;
  std::string name;
  bool passed = true;
  std::uint64_t cases = 0;
  std::string detail;  // first failure, empty on success
  double elapsed_ms = 0;
};

using Suite = PropertyResult (*)(std::uint64_t seed, Scale scale);

struct SuiteEntry {
  int criterion;
  const char* name;
  double budget_seconds;
  Suite run;
};

PropertyResult check_clow_expansion(std::uint64_t seed, Scale scale);
PropertyResult check_involution(std::uint64_t seed, Scale scale);
PropertyResult check_determinant(std::uint64_t seed, Scale scale);
PropertyResult check_back_edge(std::uint64_t seed, Scale scale);
PropertyResult check_walk_counters(std::uint64_t seed, Scale scale);
PropertyResult check_cnf_counters(std::uint64_t seed, Scale scale);
PropertyResult check_locality(std::uint64_t seed, Scale scale);
PropertyResult check_parsimony(std::uint64_t seed, Scale scale);
PropertyResult check_hom_correspondence(std::uint64_t seed, Scale scale);
PropertyResult check_branching_programs(std::uint64_t seed, Scale scale);

/// Criteria 1..10 in order.
const std::vector<SuiteEntry>& suites();

std::vector<PropertyResult> run_suites(std::uint64_t seed, Scale scale);

}  // namespace paracount::check
