#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "paracount/count.hpp"
#include "paracount/error.hpp"
#include "paracount/fo.hpp"
#include "paracount/graph.hpp"
#include "paracount/hom.hpp"
#include "paracount/pdet.hpp"
#include "paracount/walk_count.hpp"

namespace paracount {

struct ReductionRecord {
  std::string name;
  std::string source_problem;
  std::string target_problem;
  std::string parameter_bound;  // human-readable form of the bound on k'
};

struct HomInstance {
  std::size_t n = 0;  // pattern P_n*
  RelationalStructure target;
  std::uint64_t k = 0;
};

struct ReachColourInstance {
  VertexColouring colouring;
  Vertex s = 0;
  Vertex t = 0;
  std::uint64_t k = 0;
};

struct HomTarget {
  PathStarStructure pattern;
  RelationalStructure target;
  std::uint64_t k = 0;
};

struct McInstance {
  QFFormula formula;
  RelationalStructure structure;
  std::uint64_t k = 0;
};

/// pdet(matrix, k) = recovery_sign * (source count).
struct PdetInstance {
  ZeroOneMatrix matrix;
  std::uint64_t k = 0;
  int recovery_sign = 1;
};

/// Layered graph of the membership proof with k' = n + 2. When n > k the
/// source count is 0 by the gate, and a two-vertex graph without edges is
/// returned instead. Throws vocabulary-mismatch.
ReachInstance reduce_hom_to_reach(std::size_t n, const RelationalStructure& b, std::uint64_t k);

/// Pattern P_k*, target with the symmetric closure of the colour-respecting
/// edges (colour(v) = colour(u) + 1), C_1 = {s}, C_k = {t} and C_i the
/// vertices of colour i otherwise; k' = k. Throws side-condition-violated
/// unless colour(s) = 1, colour(t) = m = k and k >= 2.
HomTarget reduce_reach_colour_to_hom(const VertexColouring& vc, Vertex s, Vertex t,
                                     std::uint64_t k);

/// phi_k = (x1 = s) & E(x1,x2) & ... & E(x{k-1},xk) & (xk = t) over the
/// (E, s, t)-structure of g, with k' = |phi_k| = k + 2. Throws
/// invalid-argument for k < 2.
McInstance reduce_reach_to_mc(const DirectedGraph& g, Vertex s, Vertex t, std::uint64_t k);

/// Adjacency matrix of g plus the back edge (t, s), with recovery sign
/// (-1)^(2n-k+1). Throws not-a-dag, s-equals-t, or k-out-of-range unless
/// 1 <= k <= n.
PdetInstance reduce_reach_to_pdet(const DirectedGraph& g, Vertex s, Vertex t, std::uint64_t k);

/// Transform plus the parameter bookkeeping that verify_parsimonious checks.
template <typename Source, typename Target>
struct Reduction {
  ReductionRecord record;
  std::function<Target(const Source&)> transform;
  std::function<std::uint64_t(const Source&)> parameter_bound;
  std::function<std::uint64_t(const Target&)> target_parameter;
};

Reduction<HomInstance, ReachInstance> hom_to_reach_reduction();
Reduction<ReachColourInstance, HomTarget> reach_colour_to_hom_reduction();
Reduction<ReachInstance, McInstance> reach_to_mc_reduction();
Reduction<ReachInstance, PdetInstance> reach_to_pdet_reduction();

struct ParsimonyFailure {
  std::size_t instance = 0;
  std::string detail;
};

struct ParsimonyReport {
  std::string reduction;
  std::size_t checked = 0;
  std::vector<ParsimonyFailure> failures;

  bool passed() const noexcept { return failures.empty(); }
};

/// Replays each instance through the transform and compares the source
/// oracle with the target oracle, then checks k' against the bound.
/// Errors raised while doing so are recorded as failures.
template <typename Source, typename Target>
ParsimonyReport verify_parsimonious(const Reduction<Source, Target>& red,
                                    const std::vector<Source>& instances,
                                    const std::function<BigInt(const Source&)>& source_oracle,
                                    const std::function<BigInt(const Target&)>& target_oracle) {
  ParsimonyReport report{red.record.name, 0, {}};
  for (std::size_t i = 0; i < instances.size(); ++i) {
    ++report.checked;
    try {
      const Target out = red.transform(instances[i]);
      const BigInt expected = source_oracle(instances[i]);
      const BigInt actual = target_oracle(out);
      if (expected != actual) {
        report.failures.push_back({i, "source count " + to_decimal(expected) +
                                          " but target count " + to_decimal(actual)});
      }
      const std::uint64_t bound = red.parameter_bound(instances[i]);
      const std::uint64_t produced = red.target_parameter(out);
      if (produced > bound) {
        report.failures.push_back({i, "k' = " + std::to_string(produced) + " exceeds " +
                                          red.record.parameter_bound + " = " +
                                          std::to_string(bound)});
      }
    } catch (const Error& e) {
      report.failures.push_back({i, e.what()});
    }
  }
  return report;
}

}  // namespace paracount
