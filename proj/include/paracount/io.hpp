#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "paracount/bp.hpp"
#include "paracount/fo.hpp"
#include "paracount/graph.hpp"
#include "paracount/pdet.hpp"

namespace paracount {

// Instance file formats. Every parser rejects unknown fields
// (unknown-field), missing required fields (missing-field), values of the
// wrong shape (bad-field) and malformed text (parse-error); the validating
// constructors of the parsed types then apply their own checks.

/// Reads a whole file. Throws file-not-found.
std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

/// {"n", "edges": [[u,v],...], "colours"?, "s"?, "t"?, "clauses"?}
struct GraphFile {
  DirectedGraph graph;
  std::optional<std::vector<std::uint32_t>> colours;
  std::optional<Vertex> s;
  std::optional<Vertex> t;
  std::optional<std::vector<std::vector<std::int64_t>>> clauses;
};

GraphFile parse_graph_file(std::string_view text);
std::string serialize_graph_file(const GraphFile& file);

/// {"universeSize", "relations": [{"name","arity","tuples"}],
///  "constants": [{"name","value"}]}
RelationalStructure parse_structure(std::string_view text);
std::string serialize_structure(const RelationalStructure& structure);

/// {"op": "and"|"or"|"not", "args": [...]}, {"atom": R, "args": [terms]},
/// {"eq": [term, term]}; a term is {"var": x} or {"const": c}.
QFFormula parse_formula(std::string_view text);
std::string serialize_formula(const QFFormula& phi);

/// {"n", "rows": [[0,1,...],...]}
ZeroOneMatrix parse_matrix(std::string_view text);
std::string serialize_matrix(const ZeroOneMatrix& a);

/// {"layers", "labels": {"id": {"x": i} | {"y": j} | {"pass": true}},
///  "edges": [[from, to, bit|null]], "numX", "numY", "source", "sink"}
BranchingProgram parse_bp(std::string_view text);
std::string serialize_bp(const BranchingProgram& p);

/// 64-bit FNV-1a, printed as 16 hex digits.
std::string fnv1a_hex(std::string_view bytes);

}  // namespace paracount
