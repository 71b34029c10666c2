#pragma once

#include <string>
#include <vector>

#include "paracount/error.hpp"
#include "paracount/fo.hpp"
#include "paracount/graph.hpp"
#include "paracount/pdet.hpp"

namespace fixtures {

using namespace paracount;

inline DirectedGraph diamond() { return DirectedGraph::create(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}}); }

inline DirectedGraph path3() { return DirectedGraph::create(3, {{0, 1}, {1, 2}}); }

inline DirectedGraph two_vertex_full() {
  return DirectedGraph::create(2, {{0, 0}, {1, 1}, {0, 1}, {1, 0}});
}

inline ZeroOneMatrix ones(std::size_t n) {
  return ZeroOneMatrix::create(std::vector<std::vector<int>>(n, std::vector<int>(n, 1)));
}

inline ZeroOneMatrix identity(std::size_t n) {
  std::vector<std::vector<int>> rows(n, std::vector<int>(n, 0));
  for (std::size_t i = 0; i < n; ++i) rows[i][i] = 1;
  return ZeroOneMatrix::create(rows);
}

inline Term v(const std::string& name) { return Term::var(name); }

inline QFFormula edge(const std::string& a, const std::string& b) {
  return QFFormula::atom("E", {v(a), v(b)});
}

/// Digraph structure over (E/2) with the given tuples.
inline RelationalStructure digraph_structure(std::size_t universe, std::vector<Tuple> tuples) {
  return RelationalStructure::create(Vocabulary::create({{"E", 2}}, {}), universe,
                                     {{"E", std::move(tuples)}}, {});
}

/// Name of the Error thrown by `body`, or "" when nothing is thrown.
template <typename Body>
std::string error_name(Body&& body) {
  try {
    body();
  } catch (const Error& e) {
    return e.name();
  }
  return "";
}

}  // namespace fixtures
