#include "paracount/io.hpp"

#include <fstream>
#include <limits>
#include <set>
#include <sstream>

#include "json.hpp"
#include "paracount/error.hpp"

namespace paracount {

using nlohmann::json;

namespace {

json parse_json(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    fail("parse-error", e.what());
  }
}

void expect_object(const json& j, const std::string& where) {
  if (!j.is_object()) fail("bad-field", where + " must be an object");
}

void check_fields(const json& j, const std::string& where, const std::set<std::string>& required,
                  const std::set<std::string>& optional = {}) {
  expect_object(j, where);
  for (const auto& [key, value] : j.items()) {
    if (!required.contains(key) && !optional.contains(key)) {
      fail("unknown-field", where + " has unknown field '" + key + "'");
    }
  }
  for (const auto& key : required) {
    if (!j.contains(key)) fail("missing-field", where + " lacks field '" + key + "'");
  }
}

std::int64_t as_int(const json& j, const std::string& where) {
  if (!j.is_number_integer()) fail("bad-field", where + " must be an integer");
  return j.get<std::int64_t>();
}

std::uint64_t as_count(const json& j, const std::string& where) {
  const std::int64_t v = as_int(j, where);
  if (v < 0) fail("bad-field", where + " must be nonnegative");
  return static_cast<std::uint64_t>(v);
}

std::uint32_t as_u32(const json& j, const std::string& where) {
  const std::uint64_t v = as_count(j, where);
  if (v > std::numeric_limits<std::uint32_t>::max()) fail("bad-field", where + " is too large");
  return static_cast<std::uint32_t>(v);
}

const json& as_array(const json& j, const std::string& where) {
  if (!j.is_array()) fail("bad-field", where + " must be an array");
  return j;
}

std::string as_string(const json& j, const std::string& where) {
  if (!j.is_string()) fail("bad-field", where + " must be a string");
  return j.get<std::string>();
}

std::string field(const std::string& where, std::size_t i) {
  return where + "[" + std::to_string(i) + "]";
}

}  // namespace

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail("file-not-found", path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail("file-not-writable", path);
  out << text;
  if (!out) fail("file-not-writable", path);
}

GraphFile parse_graph_file(std::string_view text) {
  const json j = parse_json(text);
  check_fields(j, "graph", {"n", "edges"}, {"colours", "s", "t", "clauses"});
  const std::uint64_t n = as_count(j["n"], "n");
  std::vector<Edge> edges;
  const json& raw_edges = as_array(j["edges"], "edges");
  for (std::size_t i = 0; i < raw_edges.size(); ++i) {
    const json& pair = as_array(raw_edges[i], field("edges", i));
    if (pair.size() != 2) fail("bad-field", field("edges", i) + " must have two entries");
    edges.push_back({as_u32(pair[0], field("edges", i)), as_u32(pair[1], field("edges", i))});
  }
  GraphFile file{DirectedGraph::create(n, std::move(edges)), std::nullopt, std::nullopt,
                 std::nullopt, std::nullopt};
  if (j.contains("colours")) {
    std::vector<std::uint32_t> colours;
    for (const json& c : as_array(j["colours"], "colours")) colours.push_back(as_u32(c, "colours"));
    file.colours = std::move(colours);
  }
  if (j.contains("s")) file.s = as_u32(j["s"], "s");
  if (j.contains("t")) file.t = as_u32(j["t"], "t");
  if (j.contains("clauses")) {
    std::vector<std::vector<std::int64_t>> clauses;
    const json& raw = as_array(j["clauses"], "clauses");
    for (std::size_t i = 0; i < raw.size(); ++i) {
      std::vector<std::int64_t> clause;
      for (const json& lit : as_array(raw[i], field("clauses", i))) {
        clause.push_back(as_int(lit, field("clauses", i)));
      }
      clauses.push_back(std::move(clause));
    }
    file.clauses = std::move(clauses);
  }
  return file;
}

std::string serialize_graph_file(const GraphFile& file) {
  json j;
  j["n"] = file.graph.vertex_count();
  j["edges"] = json::array();
  for (const Edge& e : file.graph.edges()) j["edges"].push_back({e.source, e.target});
  if (file.colours) j["colours"] = *file.colours;
  if (file.s) j["s"] = *file.s;
  if (file.t) j["t"] = *file.t;
  if (file.clauses) j["clauses"] = *file.clauses;
  return j.dump() + "\n";
}

RelationalStructure parse_structure(std::string_view text) {
  const json j = parse_json(text);
  check_fields(j, "structure", {"universeSize", "relations"}, {"constants"});
  const std::uint64_t universe = as_count(j["universeSize"], "universeSize");

  std::vector<RelationSymbol> symbols;
  std::map<std::string, std::vector<Tuple>> interpretation;
  const json& relations = as_array(j["relations"], "relations");
  for (std::size_t i = 0; i < relations.size(); ++i) {
    const std::string where = field("relations", i);
    check_fields(relations[i], where, {"name", "arity", "tuples"});
    const std::string name = as_string(relations[i]["name"], where + ".name");
    symbols.push_back({name, as_count(relations[i]["arity"], where + ".arity")});
    auto& tuples = interpretation[name];
    for (const json& raw : as_array(relations[i]["tuples"], where + ".tuples")) {
      Tuple tuple;
      for (const json& e : as_array(raw, where + ".tuples")) tuple.push_back(as_u32(e, where));
      tuples.push_back(std::move(tuple));
    }
  }

  std::vector<std::string> constant_names;
  std::map<std::string, Element> constant_values;
  if (j.contains("constants")) {
    const json& constants = as_array(j["constants"], "constants");
    for (std::size_t i = 0; i < constants.size(); ++i) {
      const std::string where = field("constants", i);
      check_fields(constants[i], where, {"name", "value"});
      const std::string name = as_string(constants[i]["name"], where + ".name");
      constant_names.push_back(name);
      constant_values[name] = as_u32(constants[i]["value"], where + ".value");
    }
  }
  return RelationalStructure::create(Vocabulary::create(std::move(symbols), constant_names),
                                     universe, interpretation, constant_values);
}

std::string serialize_structure(const RelationalStructure& structure) {
  const Vocabulary& vocab = structure.vocabulary();
  json j;
  j["universeSize"] = structure.universe_size();
  j["relations"] = json::array();
  for (std::size_t r = 0; r < vocab.relations().size(); ++r) {
    json tuples = json::array();
    for (const Tuple& t : structure.relation(r)) tuples.push_back(t);
    j["relations"].push_back({{"name", vocab.relations()[r].name},
                              {"arity", vocab.relations()[r].arity},
                              {"tuples", std::move(tuples)}});
  }
  j["constants"] = json::array();
  for (std::size_t c = 0; c < vocab.constants().size(); ++c) {
    j["constants"].push_back({{"name", vocab.constants()[c]}, {"value", structure.constant(c)}});
  }
  return j.dump() + "\n";
}

namespace {

Term term_from_json(const json& j, const std::string& where) {
  expect_object(j, where);
  if (j.size() != 1) fail("bad-field", where + " must have exactly one of 'var' or 'const'");
  if (j.contains("var")) return Term::var(as_string(j["var"], where + ".var"));
  if (j.contains("const")) return Term::constant(as_string(j["const"], where + ".const"));
  fail("unknown-field", where + " must be {\"var\": ...} or {\"const\": ...}");
}

json term_to_json(const Term& t) {
  return json{{t.kind == Term::Kind::Variable ? "var" : "const", t.name}};
}

QFFormula formula_from_json(const json& j, const std::string& where) {
  expect_object(j, where);
  if (j.contains("op")) {
    check_fields(j, where, {"op", "args"});
    const std::string op = as_string(j["op"], where + ".op");
    const json& raw = as_array(j["args"], where + ".args");
    std::vector<QFFormula> args;
    for (std::size_t i = 0; i < raw.size(); ++i) {
      args.push_back(formula_from_json(raw[i], field(where + ".args", i)));
    }
    if (op == "and") return QFFormula::conjunction(args);
    if (op == "or") return QFFormula::disjunction(args);
    if (op == "not") {
      if (args.size() != 1) fail("bad-field", where + ": 'not' takes one argument");
      return QFFormula::negation(args.front());
    }
    fail("bad-field", where + ": unknown op '" + op + "'");
  }
  if (j.contains("atom")) {
    check_fields(j, where, {"atom", "args"});
    std::vector<Term> terms;
    const json& raw = as_array(j["args"], where + ".args");
    for (std::size_t i = 0; i < raw.size(); ++i) {
      terms.push_back(term_from_json(raw[i], field(where + ".args", i)));
    }
    return QFFormula::atom(as_string(j["atom"], where + ".atom"), std::move(terms));
  }
  if (j.contains("eq")) {
    check_fields(j, where, {"eq"});
    const json& raw = as_array(j["eq"], where + ".eq");
    if (raw.size() != 2) fail("bad-field", where + ".eq must have two terms");
    return QFFormula::equality(term_from_json(raw[0], where + ".eq[0]"),
                               term_from_json(raw[1], where + ".eq[1]"));
  }
  fail("bad-field", where + " is neither a connective, an atom nor an equality");
}

json node_to_json(const FormulaNode& node) {
  switch (node.kind) {
    case FormulaNode::Kind::Relation: {
      json args = json::array();
      for (const Term& t : node.args) args.push_back(term_to_json(t));
      return {{"atom", node.relation}, {"args", std::move(args)}};
    }
    case FormulaNode::Kind::Equality:
      return {{"eq", {term_to_json(node.args[0]), term_to_json(node.args[1])}}};
    default: {
      json args = json::array();
      for (const auto& child : node.children) args.push_back(node_to_json(*child));
      const char* op = node.kind == FormulaNode::Kind::And  ? "and"
                       : node.kind == FormulaNode::Kind::Or ? "or"
                                                            : "not";
      return {{"op", op}, {"args", std::move(args)}};
    }
  }
}

}  // namespace

QFFormula parse_formula(std::string_view text) { return formula_from_json(parse_json(text), "formula"); }

std::string serialize_formula(const QFFormula& phi) { return node_to_json(phi.root()).dump() + "\n"; }

ZeroOneMatrix parse_matrix(std::string_view text) {
  const json j = parse_json(text);
  check_fields(j, "matrix", {"n", "rows"});
  const std::uint64_t n = as_count(j["n"], "n");
  const json& raw = as_array(j["rows"], "rows");
  if (raw.size() != n) {
    fail("bad-matrix", "n = " + std::to_string(n) + " but " + std::to_string(raw.size()) + " rows");
  }
  std::vector<std::vector<int>> rows;
  for (std::size_t i = 0; i < raw.size(); ++i) {
    std::vector<int> row;
    for (const json& entry : as_array(raw[i], field("rows", i))) {
      const std::int64_t v = as_int(entry, field("rows", i));
      row.push_back(v >= std::numeric_limits<int>::min() && v <= std::numeric_limits<int>::max()
                        ? static_cast<int>(v)
                        : 2);
    }
    rows.push_back(std::move(row));
  }
  return ZeroOneMatrix::create(rows);
}

std::string serialize_matrix(const ZeroOneMatrix& a) {
  return json{{"n", a.size()}, {"rows", a.rows()}}.dump() + "\n";
}

BranchingProgram parse_bp(std::string_view text) {
  const json j = parse_json(text);
  check_fields(j, "program", {"layers", "labels", "edges", "numX", "numY", "source", "sink"});

  std::vector<std::vector<NodeId>> layers;
  const json& raw_layers = as_array(j["layers"], "layers");
  for (std::size_t i = 0; i < raw_layers.size(); ++i) {
    std::vector<NodeId> layer;
    for (const json& v : as_array(raw_layers[i], field("layers", i))) {
      layer.push_back(as_u32(v, field("layers", i)));
    }
    layers.push_back(std::move(layer));
  }

  std::map<NodeId, NodeLabel> labels;
  expect_object(j["labels"], "labels");
  for (const auto& [key, value] : j["labels"].items()) {
    const std::string where = "labels." + key;
    NodeId id = 0;
    try {
      std::size_t used = 0;
      const unsigned long parsed = std::stoul(key, &used);
      if (used != key.size() || parsed > std::numeric_limits<NodeId>::max()) throw std::out_of_range(key);
      id = static_cast<NodeId>(parsed);
    } catch (const std::exception&) {
      fail("bad-field", where + ": label keys must be node ids");
    }
    expect_object(value, where);
    if (value.size() != 1) fail("bad-field", where + " must have exactly one of x, y, pass");
    if (value.contains("x")) {
      labels[id] = NodeLabel::x(as_u32(value["x"], where + ".x"));
    } else if (value.contains("y")) {
      labels[id] = NodeLabel::y(as_u32(value["y"], where + ".y"));
    } else if (value.contains("pass")) {
      if (value["pass"] != true) fail("bad-field", where + ".pass must be true");
      labels[id] = NodeLabel::pass();
    } else {
      fail("unknown-field", where + " must be {x}, {y} or {pass}");
    }
  }

  std::vector<RawBpEdge> edges;
  const json& raw_edges = as_array(j["edges"], "edges");
  for (std::size_t i = 0; i < raw_edges.size(); ++i) {
    const json& e = as_array(raw_edges[i], field("edges", i));
    if (e.size() != 3) fail("bad-field", field("edges", i) + " must be [from, to, bit]");
    RawBpEdge edge{as_u32(e[0], field("edges", i)), as_u32(e[1], field("edges", i)), std::nullopt};
    if (!e[2].is_null()) {
      if (!e[2].is_number_integer()) fail("bad-bit-label", field("edges", i) + " bit is not 0 or 1");
      edge.bit = e[2].get<std::int64_t>();
    }
    edges.push_back(edge);
  }
  return BranchingProgram::create(std::move(layers), labels, edges, as_u32(j["numX"], "numX"),
                                  as_u32(j["numY"], "numY"), as_u32(j["source"], "source"),
                                  as_u32(j["sink"], "sink"));
}

std::string serialize_bp(const BranchingProgram& p) {
  json labels = json::object();
  for (NodeId v = 0; v < p.node_count(); ++v) {
    const auto& label = p.label(v);
    if (!label) continue;
    switch (label->kind) {
      case NodeLabel::Kind::X:
        labels[std::to_string(v)] = {{"x", label->index}};
        break;
      case NodeLabel::Kind::Y:
        labels[std::to_string(v)] = {{"y", label->index}};
        break;
      case NodeLabel::Kind::Pass:
        labels[std::to_string(v)] = {{"pass", true}};
        break;
    }
  }
  json edges = json::array();
  for (const BpEdge& e : p.edges()) {
    edges.push_back({e.from, e.to, e.bit ? json(*e.bit ? 1 : 0) : json(nullptr)});
  }
  return json{{"layers", p.layers()}, {"labels", std::move(labels)}, {"edges", std::move(edges)},
              {"numX", p.num_x()},    {"numY", p.num_y()},           {"source", p.source()},
              {"sink", p.sink()}}
             .dump() +
         "\n";
}

std::string fnv1a_hex(std::string_view bytes) {
  std::uint64_t hash = 14695981039346656037ULL;
  for (unsigned char c : bytes) {
    hash ^= c;
    hash *= 1099511628211ULL;
  }
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[static_cast<std::size_t>(i)] = kDigits[hash & 0xF];
    hash >>= 4;
  }
  return out;
}

}  // namespace paracount
