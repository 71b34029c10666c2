#include "paracount/cnf.hpp"

#include <algorithm>
#include <sstream>
#include <string>

#include "paracount/error.hpp"
#include "paracount/walk_count.hpp"

namespace paracount {

EdgeCNF EdgeCNF::create(const DirectedGraph& carrier, std::vector<Clause> clauses) {
  for (const Clause& clause : clauses) {
    for (const Literal& lit : clause) {
      if (lit.edge >= carrier.edge_count()) {
        fail("unknown-edge-variable", "edge id " + std::to_string(lit.edge) + " but graph has " +
                                          std::to_string(carrier.edge_count()) + " edges");
      }
    }
  }
  EdgeCNF phi;
  phi.clauses_ = std::move(clauses);
  return phi;
}

EdgeCNF EdgeCNF::from_signed(const DirectedGraph& carrier,
                             const std::vector<std::vector<std::int64_t>>& clauses) {
  std::vector<Clause> converted;
  converted.reserve(clauses.size());
  for (const auto& raw : clauses) {
    Clause clause;
    for (std::int64_t lit : raw) {
      if (lit == 0) fail("unknown-edge-variable", "literal 0 is not a variable");
      const std::int64_t magnitude = lit < 0 ? -lit : lit;
      if (magnitude > static_cast<std::int64_t>(carrier.edge_count())) {
        fail("unknown-edge-variable", "variable " + std::to_string(magnitude) + " but graph has " +
                                          std::to_string(carrier.edge_count()) + " edges");
      }
      clause.push_back({static_cast<EdgeId>(magnitude - 1), lit > 0});
    }
    converted.push_back(std::move(clause));
  }
  return create(carrier, std::move(converted));
}

std::uint64_t EdgeCNF::size() const noexcept {
  std::uint64_t total = clauses_.size();
  for (const Clause& c : clauses_) total += c.size();
  return total;
}

std::vector<EdgeId> EdgeCNF::variables() const {
  std::vector<EdgeId> vars;
  for (const Clause& c : clauses_) {
    for (const Literal& lit : c) vars.push_back(lit.edge);
  }
  std::sort(vars.begin(), vars.end());
  vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
  return vars;
}

bool EdgeCNF::satisfied_by(const std::vector<bool>& assignment) const {
  for (const Clause& c : clauses_) {
    bool sat = false;
    for (const Literal& lit : c) {
      if (assignment.at(lit.edge) == lit.positive) {
        sat = true;
        break;
      }
    }
    if (!sat) return false;
  }
  return true;
}

bool eval_cnf(const EdgeCNF& phi, const std::map<EdgeId, bool>& assignment) {
  for (EdgeId var : phi.variables()) {
    if (!assignment.contains(var)) {
      fail("unassigned-variable", "edge " + std::to_string(var) + " has no value");
    }
  }
  for (const Clause& c : phi.clauses()) {
    bool sat = false;
    for (const Literal& lit : c) sat = sat || assignment.at(lit.edge) == lit.positive;
    if (!sat) return false;
  }
  return true;
}

std::vector<std::vector<std::int64_t>> parse_dimacs(std::istream& in) {
  std::vector<std::vector<std::int64_t>> clauses;
  std::vector<std::int64_t> current;
  bool seen_header = false;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream tokens(line);
    std::string first;
    if (!(tokens >> first)) continue;
    if (first == "c" || first[0] == 'c' || first[0] == '%') continue;
    if (first == "p") {
      std::string format;
      if (!(tokens >> format) || format != "cnf") {
        fail("parse-error", "line " + std::to_string(line_no) + ": expected 'p cnf'");
      }
      seen_header = true;
      continue;
    }
    tokens.clear();
    tokens.str(line);
    std::string token;
    while (tokens >> token) {
      std::int64_t lit = 0;
      try {
        std::size_t used = 0;
        lit = std::stoll(token, &used);
        if (used != token.size()) throw std::invalid_argument(token);
      } catch (const std::exception&) {
        fail("parse-error", "line " + std::to_string(line_no) + ": bad literal '" + token + "'");
      }
      if (lit == 0) {
        clauses.push_back(std::move(current));
        current.clear();
      } else {
        current.push_back(lit);
      }
    }
  }
  if (!seen_header) fail("parse-error", "missing 'p cnf' header");
  if (!current.empty()) clauses.push_back(std::move(current));
  return clauses;
}

namespace {

void require_degree_two(const DirectedGraph& g) {
  if (max_out_degree(g) > 2) {
    fail("degree-bound-violated",
         "max out-degree " + std::to_string(max_out_degree(g)) + " exceeds 2");
  }
}

// Bit set over the CNF's variables, used as a hashable DP key.
using VarMask = std::vector<std::uint64_t>;

bool mask_test(const VarMask& m, std::size_t i) { return (m[i / 64] >> (i % 64)) & 1U; }
void mask_set(VarMask& m, std::size_t i) { m[i / 64] |= std::uint64_t{1} << (i % 64); }

}  // namespace

WalkCount count_log_reach2_cnf(const DirectedGraph& g, Vertex s, Vertex t, const EdgeCNF& phi,
                               std::uint64_t a, std::uint64_t k) {
  require_vertex(g, s);
  require_vertex(g, t);
  require_degree_two(g);
  if (!log_gate_passes(a, k, g.vertex_count() + phi.size())) return 0;

  // Only edges mentioned by phi influence satisfaction, so the walk state is
  // the current vertex plus which of those edges were traversed so far.
  const std::vector<EdgeId> vars = phi.variables();
  std::vector<std::int64_t> var_index(g.edge_count(), -1);
  for (std::size_t i = 0; i < vars.size(); ++i) var_index[vars[i]] = static_cast<std::int64_t>(i);
  const std::size_t words = (vars.size() + 63) / 64;

  std::map<std::pair<Vertex, VarMask>, WalkCount> frontier;
  frontier[{s, VarMask(words, 0)}] = 1;
  for (std::uint64_t step = 0; step < a; ++step) {
    std::map<std::pair<Vertex, VarMask>, WalkCount> next;
    for (const auto& [state, count] : frontier) {
      const auto& [v, mask] = state;
      auto succ = g.successors(v);
      auto ids = g.out_edges(v);
      for (std::size_t j = 0; j < succ.size(); ++j) {
        VarMask m = mask;
        if (var_index[ids[j]] >= 0) mask_set(m, static_cast<std::size_t>(var_index[ids[j]]));
        next[{succ[j], std::move(m)}] += count;
      }
    }
    frontier = std::move(next);
  }

  WalkCount total = 0;
  std::vector<bool> assignment(g.edge_count(), false);
  for (const auto& [state, count] : frontier) {
    if (state.first != t) continue;
    for (std::size_t i = 0; i < vars.size(); ++i) assignment[vars[i]] = mask_test(state.second, i);
    if (phi.satisfied_by(assignment)) total += count;
  }
  return total;
}

namespace {

struct CoverSearch {
  const DirectedGraph& g;
  std::uint64_t limit;
  std::vector<bool> target_used;
  std::vector<EdgeId> chosen;
  std::vector<CycleCover> found;

  void run(Vertex v) {
    if (v == g.vertex_count()) {
      if (found.size() >= limit) {
        fail("limit-exceeded", "more than " + std::to_string(limit) + " cycle covers");
      }
      CycleCover cover{chosen};
      std::sort(cover.edges.begin(), cover.edges.end());
      found.push_back(std::move(cover));
      return;
    }
    auto succ = g.successors(v);
    auto ids = g.out_edges(v);
    for (std::size_t j = 0; j < succ.size(); ++j) {
      if (target_used[succ[j]]) continue;
      target_used[succ[j]] = true;
      chosen.push_back(ids[j]);
      run(v + 1);
      chosen.pop_back();
      target_used[succ[j]] = false;
    }
  }
};

// Membership procedure for cycle covers: guess cycle heads in ascending
// order (each the least vertex on its cycle), trace each simple cycle through
// larger uncovered vertices, and cover everything else by self-loops.
struct ConstrainedCoverCount {
  const DirectedGraph& g;
  const EdgeCNF& phi;
  std::uint64_t max_cycles;
  std::uint64_t target_covered;
  std::vector<bool> covered;
  std::vector<EdgeId> cycle_edges;
  WalkCount total = 0;

  void finish() {
    std::vector<bool> assignment(g.edge_count(), false);
    for (EdgeId id : cycle_edges) assignment[id] = true;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      if (covered[v]) continue;
      auto loop = g.edge_id(v, v);
      if (!loop) return;
      assignment[*loop] = true;
    }
    if (phi.satisfied_by(assignment)) total += 1;
  }

  void choose(Vertex min_head, std::uint64_t cycles, std::uint64_t covered_count) {
    if (covered_count == target_covered) finish();
    if (cycles == max_cycles) return;
    for (Vertex head = min_head; head < g.vertex_count(); ++head) {
      if (covered[head]) continue;
      covered[head] = true;
      trace(head, head, 1, cycles, covered_count);
      covered[head] = false;
    }
  }

  void trace(Vertex head, Vertex at, std::uint64_t length, std::uint64_t cycles,
             std::uint64_t covered_count) {
    auto succ = g.successors(at);
    auto ids = g.out_edges(at);
    for (std::size_t j = 0; j < succ.size(); ++j) {
      const Vertex w = succ[j];
      if (w == head) {
        if (length < 2) continue;  // a self-loop is a trivial cycle
        if (covered_count + length > target_covered) continue;
        cycle_edges.push_back(ids[j]);
        choose(head + 1, cycles + 1, covered_count + length);
        cycle_edges.pop_back();
      } else if (w > head && !covered[w] && covered_count + length + 1 <= target_covered) {
        covered[w] = true;
        cycle_edges.push_back(ids[j]);
        trace(head, w, length + 1, cycles, covered_count);
        cycle_edges.pop_back();
        covered[w] = false;
      }
    }
  }
};

}  // namespace

std::vector<CycleCover> enumerate_cycle_covers(const DirectedGraph& g, std::uint64_t limit) {
  if (limit == 0) fail("invalid-argument", "limit must be positive");
  CoverSearch search{g, limit, std::vector<bool>(g.vertex_count(), false), {}, {}};
  search.run(0);
  std::sort(search.found.begin(), search.found.end());
  return std::move(search.found);
}

WalkCount count_cycle_cover2_cnf(const DirectedGraph& g, const EdgeCNF& phi, std::uint64_t a,
                                 std::uint64_t k) {
  require_degree_two(g);
  const std::uint64_t size_term = g.vertex_count() + g.edge_count() + phi.size();
  if (a > ceil_log2(size_term)) return 0;
  const unsigned __int128 wanted = static_cast<unsigned __int128>(k) * a;
  if (wanted > g.vertex_count()) return 0;
  ConstrainedCoverCount search{g,
                               phi,
                               k,
                               static_cast<std::uint64_t>(wanted),
                               std::vector<bool>(g.vertex_count(), false),
                               {},
                               0};
  search.choose(0, 0, 0);
  return search.total;
}

}  // namespace paracount
