#include "paracount/fo.hpp"

#include <algorithm>
#include <functional>
#include <unordered_map>
#include <utility>

#include "paracount/error.hpp"

namespace paracount {

// ---------------------------------------------------------------------------
// Vocabulary and structures

Vocabulary Vocabulary::create(std::vector<RelationSymbol> relations,
                              std::vector<std::string> constants) {
  std::set<std::string> seen;
  for (const auto& rel : relations) {
    if (rel.arity == 0) fail("bad-vocabulary", "relation " + rel.name + " has arity 0");
    if (!seen.insert(rel.name).second) fail("bad-vocabulary", "duplicate name " + rel.name);
  }
  for (const auto& c : constants) {
    if (!seen.insert(c).second) fail("bad-vocabulary", "duplicate name " + c);
  }
  Vocabulary v;
  v.relations_ = std::move(relations);
  v.constants_ = std::move(constants);
  return v;
}

std::ptrdiff_t Vocabulary::relation_index(const std::string& name) const {
  for (std::size_t i = 0; i < relations_.size(); ++i) {
    if (relations_[i].name == name) return static_cast<std::ptrdiff_t>(i);
  }
  return -1;
}

std::ptrdiff_t Vocabulary::constant_index(const std::string& name) const {
  for (std::size_t i = 0; i < constants_.size(); ++i) {
    if (constants_[i] == name) return static_cast<std::ptrdiff_t>(i);
  }
  return -1;
}

bool Vocabulary::same_relations(const Vocabulary& other) const {
  if (relations_.size() != other.relations_.size()) return false;
  for (const auto& rel : relations_) {
    const auto idx = other.relation_index(rel.name);
    if (idx < 0 || other.relations_[static_cast<std::size_t>(idx)].arity != rel.arity) return false;
  }
  return true;
}

RelationalStructure RelationalStructure::create(
    Vocabulary vocab, std::size_t universe_size,
    const std::map<std::string, std::vector<Tuple>>& interpretation,
    const std::map<std::string, Element>& constant_values) {
  if (universe_size == 0) fail("bad-structure", "universe must be nonempty");
  RelationalStructure s;
  s.universe_size_ = universe_size;
  s.relations_.resize(vocab.relations().size());
  for (const auto& [name, tuples] : interpretation) {
    const auto idx = vocab.relation_index(name);
    if (idx < 0) fail("bad-structure", "relation " + name + " is not in the vocabulary");
    const std::size_t arity = vocab.relations()[static_cast<std::size_t>(idx)].arity;
    for (const Tuple& t : tuples) {
      if (t.size() != arity) {
        fail("bad-structure", "tuple of width " + std::to_string(t.size()) + " in " + name +
                                  " of arity " + std::to_string(arity));
      }
      for (Element e : t) {
        if (e >= universe_size) {
          fail("bad-structure", "element " + std::to_string(e) + " outside universe in " + name);
        }
      }
      s.relations_[static_cast<std::size_t>(idx)].insert(t);
    }
  }
  s.constants_.resize(vocab.constants().size());
  for (std::size_t i = 0; i < vocab.constants().size(); ++i) {
    auto it = constant_values.find(vocab.constants()[i]);
    if (it == constant_values.end()) {
      fail("bad-structure", "constant " + vocab.constants()[i] + " has no value");
    }
    if (it->second >= universe_size) {
      fail("bad-structure", "constant " + it->first + " outside universe");
    }
    s.constants_[i] = it->second;
  }
  for (const auto& [name, value] : constant_values) {
    if (vocab.constant_index(name) < 0) fail("bad-structure", "unknown constant " + name);
  }
  s.vocab_ = std::move(vocab);
  return s;
}

const std::set<Tuple>& RelationalStructure::relation(const std::string& name) const {
  const auto idx = vocab_.relation_index(name);
  if (idx < 0) fail("symbol-not-interpreted", "relation " + name);
  return relations_[static_cast<std::size_t>(idx)];
}

bool RelationalStructure::holds(std::size_t relation_index, const Tuple& tuple) const {
  return relations_.at(relation_index).contains(tuple);
}

Element RelationalStructure::constant(const std::string& name) const {
  const auto idx = vocab_.constant_index(name);
  if (idx < 0) fail("symbol-not-interpreted", "constant " + name);
  return constants_[static_cast<std::size_t>(idx)];
}

// ---------------------------------------------------------------------------
// Formulas

namespace {

using NodePtr = std::shared_ptr<const FormulaNode>;

void collect_atoms(const FormulaNode& node, std::vector<const FormulaNode*>& out) {
  if (node.is_atom()) {
    out.push_back(&node);
    return;
  }
  for (const auto& child : node.children) collect_atoms(*child, out);
}

std::uint64_t count_nodes(const FormulaNode& node) {
  std::uint64_t total = 1;
  for (const auto& child : node.children) total += count_nodes(*child);
  return total;
}

NodePtr rename_node(const NodePtr& node, const std::map<std::string, std::string>& mapping) {
  auto copy = std::make_shared<FormulaNode>(*node);
  for (Term& t : copy->args) {
    if (t.kind != Term::Kind::Variable) continue;
    if (auto it = mapping.find(t.name); it != mapping.end()) t.name = it->second;
  }
  for (auto& child : copy->children) child = rename_node(child, mapping);
  return copy;
}

std::vector<std::string> atom_variables(const FormulaNode& atom) {
  std::vector<std::string> vars;
  for (const Term& t : atom.args) {
    if (t.kind == Term::Kind::Variable &&
        std::find(vars.begin(), vars.end(), t.name) == vars.end()) {
      vars.push_back(t.name);
    }
  }
  return vars;
}

}  // namespace

QFFormula QFFormula::atom(std::string relation, std::vector<Term> args) {
  if (args.empty()) fail("invalid-formula", "relation atom " + relation + " without arguments");
  auto node = std::make_shared<FormulaNode>();
  node->kind = FormulaNode::Kind::Relation;
  node->relation = std::move(relation);
  node->args = std::move(args);
  return QFFormula(std::move(node));
}

QFFormula QFFormula::equality(Term lhs, Term rhs) {
  auto node = std::make_shared<FormulaNode>();
  node->kind = FormulaNode::Kind::Equality;
  node->args = {std::move(lhs), std::move(rhs)};
  return QFFormula(std::move(node));
}

namespace {

NodePtr connective(FormulaNode::Kind kind, const std::vector<QFFormula>& operands,
                   const char* name) {
  if (operands.empty()) fail("invalid-formula", std::string(name) + " without operands");
  auto node = std::make_shared<FormulaNode>();
  node->kind = kind;
  for (const auto& op : operands) node->children.push_back(std::make_shared<FormulaNode>(op.root()));
  return node;
}

}  // namespace

QFFormula QFFormula::conjunction(const std::vector<QFFormula>& operands) {
  return QFFormula(connective(FormulaNode::Kind::And, operands, "and"));
}

QFFormula QFFormula::disjunction(const std::vector<QFFormula>& operands) {
  return QFFormula(connective(FormulaNode::Kind::Or, operands, "or"));
}

QFFormula QFFormula::negation(const QFFormula& operand) {
  return QFFormula(connective(FormulaNode::Kind::Not, {operand}, "not"));
}

std::vector<const FormulaNode*> QFFormula::atoms() const {
  std::vector<const FormulaNode*> out;
  collect_atoms(*root_, out);
  return out;
}

std::vector<std::string> QFFormula::free_variables() const {
  std::vector<std::string> vars;
  for (const FormulaNode* atom : atoms()) {
    for (const auto& v : atom_variables(*atom)) {
      if (std::find(vars.begin(), vars.end(), v) == vars.end()) vars.push_back(v);
    }
  }
  return vars;
}

QFFormula QFFormula::rename(const std::map<std::string, std::string>& mapping) const {
  return QFFormula(rename_node(root_, mapping));
}

std::uint64_t formula_size(const QFFormula& phi) { return count_nodes(phi.root()); }

std::uint64_t locality_radius(const QFFormula& phi) {
  std::map<std::string, std::pair<std::size_t, std::size_t>> span;
  const auto atoms = phi.atoms();
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    for (const auto& v : atom_variables(*atoms[i])) {
      auto [it, inserted] = span.try_emplace(v, i, i);
      if (!inserted) it->second.second = i;
    }
  }
  std::uint64_t radius = 0;
  for (const auto& [name, range] : span) radius = std::max<std::uint64_t>(radius, range.second - range.first);
  return radius;
}

std::uint64_t max_arity(const QFFormula& phi) {
  std::uint64_t best = 0;
  for (const FormulaNode* atom : phi.atoms()) {
    if (atom->kind == FormulaNode::Kind::Relation) best = std::max<std::uint64_t>(best, atom->args.size());
  }
  return best;
}

// ---------------------------------------------------------------------------
// Evaluation

namespace {

// A term resolved against a structure: either a slot in the assignment
// vector or a fixed element.
struct ResolvedTerm {
  bool is_variable;
  std::size_t slot;
  Element value;
};

struct ResolvedAtom {
  bool is_equality;
  std::size_t relation;
  std::vector<ResolvedTerm> terms;
};

struct Resolver {
  const RelationalStructure& structure;
  std::map<std::string, std::size_t> slots;

  ResolvedTerm term(const Term& t) const {
    if (t.kind == Term::Kind::Variable) return {true, slots.at(t.name), 0};
    const auto idx = structure.vocabulary().constant_index(t.name);
    if (idx < 0) fail("symbol-not-interpreted", "constant " + t.name);
    return {false, 0, structure.constant(static_cast<std::size_t>(idx))};
  }

  ResolvedAtom atom(const FormulaNode& node) const {
    ResolvedAtom out{node.kind == FormulaNode::Kind::Equality, 0, {}};
    if (!out.is_equality) {
      const auto idx = structure.vocabulary().relation_index(node.relation);
      if (idx < 0) fail("symbol-not-interpreted", "relation " + node.relation);
      const std::size_t arity = structure.vocabulary().relations()[static_cast<std::size_t>(idx)].arity;
      if (arity != node.args.size()) {
        fail("arity-mismatch", node.relation + " declared with arity " + std::to_string(arity) +
                                   " but used with " + std::to_string(node.args.size()) +
                                   " arguments");
      }
      out.relation = static_cast<std::size_t>(idx);
    }
    for (const Term& t : node.args) out.terms.push_back(term(t));
    return out;
  }
};

Element value_of(const ResolvedTerm& t, const std::vector<Element>& assignment) {
  return t.is_variable ? assignment[t.slot] : t.value;
}

bool eval_atom(const ResolvedAtom& atom, const RelationalStructure& structure,
               const std::vector<Element>& assignment) {
  if (atom.is_equality) {
    return value_of(atom.terms[0], assignment) == value_of(atom.terms[1], assignment);
  }
  Tuple tuple;
  tuple.reserve(atom.terms.size());
  for (const auto& t : atom.terms) tuple.push_back(value_of(t, assignment));
  return structure.holds(atom.relation, tuple);
}

Resolver make_resolver(const QFFormula& phi, const RelationalStructure& structure) {
  Resolver r{structure, {}};
  const auto vars = phi.free_variables();
  for (std::size_t i = 0; i < vars.size(); ++i) r.slots[vars[i]] = i;
  return r;
}

// Resolves all atoms up front so that symbol errors surface before any
// enumeration starts.
std::unordered_map<const FormulaNode*, ResolvedAtom> resolve_all(const QFFormula& phi,
                                                                 const Resolver& resolver) {
  std::unordered_map<const FormulaNode*, ResolvedAtom> out;
  for (const FormulaNode* atom : phi.atoms()) out.emplace(atom, resolver.atom(*atom));
  return out;
}

bool eval_node(const FormulaNode& node,
               const std::unordered_map<const FormulaNode*, ResolvedAtom>& resolved,
               const RelationalStructure& structure, const std::vector<Element>& assignment) {
  switch (node.kind) {
    case FormulaNode::Kind::And:
      for (const auto& c : node.children) {
        if (!eval_node(*c, resolved, structure, assignment)) return false;
      }
      return true;
    case FormulaNode::Kind::Or:
      for (const auto& c : node.children) {
        if (eval_node(*c, resolved, structure, assignment)) return true;
      }
      return false;
    case FormulaNode::Kind::Not:
      return !eval_node(*node.children.front(), resolved, structure, assignment);
    default:
      return eval_atom(resolved.at(&node), structure, assignment);
  }
}

}  // namespace

bool evaluate(const QFFormula& phi, const RelationalStructure& structure,
              const std::vector<Element>& assignment) {
  const Resolver resolver = make_resolver(phi, structure);
  if (assignment.size() != resolver.slots.size()) {
    fail("width-mismatch", "assignment has " + std::to_string(assignment.size()) +
                               " values for " + std::to_string(resolver.slots.size()) +
                               " variables");
  }
  const auto resolved = resolve_all(phi, resolver);
  return eval_node(phi.root(), resolved, structure, assignment);
}

WalkCount count_mc(const QFFormula& phi, const RelationalStructure& structure, std::uint64_t k) {
  const Resolver resolver = make_resolver(phi, structure);
  const auto resolved = resolve_all(phi, resolver);
  if (k != formula_size(phi)) return 0;

  const std::size_t v = resolver.slots.size();
  const std::size_t u = structure.universe_size();
  std::vector<Element> assignment(v, 0);
  WalkCount total = 0;
  while (true) {
    if (eval_node(phi.root(), resolved, structure, assignment)) total += 1;
    std::size_t pos = 0;
    while (pos < v && ++assignment[pos] == u) assignment[pos++] = 0;
    if (pos == v) break;
  }
  return total;
}

// ---------------------------------------------------------------------------
// Locality sweep

namespace {

enum class Op { PushAtom, Not, And, Or };

// Postfix program whose n-ary connectives are folded pairwise, so the stack
// never holds more than (tree depth + 1) pending values.
void compile(const FormulaNode& node, std::vector<Op>& out) {
  switch (node.kind) {
    case FormulaNode::Kind::Not:
      compile(*node.children.front(), out);
      out.push_back(Op::Not);
      return;
    case FormulaNode::Kind::And:
    case FormulaNode::Kind::Or: {
      const Op fold = node.kind == FormulaNode::Kind::And ? Op::And : Op::Or;
      compile(*node.children.front(), out);
      for (std::size_t i = 1; i < node.children.size(); ++i) {
        compile(*node.children[i], out);
        out.push_back(fold);
      }
      return;
    }
    default:
      out.push_back(Op::PushAtom);
  }
}

void apply(Op op, std::vector<bool>& stack) {
  if (op == Op::Not) {
    stack.back() = !stack.back();
    return;
  }
  const bool rhs = stack.back();
  stack.pop_back();
  stack.back() = op == Op::And ? (stack.back() && rhs) : (stack.back() || rhs);
}

struct SweepPlan {
  std::vector<std::vector<std::string>> atom_vars;
  std::vector<std::vector<std::string>> bind_at;     // variables first seen at atom i
  std::vector<std::vector<std::string>> release_at;  // variables last seen at atom i
  std::vector<std::vector<Op>> ops_after;            // connective ops following atom i
};

SweepPlan plan_sweep(const QFFormula& phi) {
  const auto atoms = phi.atoms();
  SweepPlan plan;
  plan.atom_vars.resize(atoms.size());
  plan.bind_at.resize(atoms.size());
  plan.release_at.resize(atoms.size());
  plan.ops_after.resize(atoms.size());
  std::map<std::string, std::size_t> last;
  std::set<std::string> seen;
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    plan.atom_vars[i] = atom_variables(*atoms[i]);
    for (const auto& v : plan.atom_vars[i]) {
      if (seen.insert(v).second) plan.bind_at[i].push_back(v);
      last[v] = i;
    }
  }
  for (const auto& [v, i] : last) plan.release_at[i].push_back(v);

  std::vector<Op> program;
  compile(phi.root(), program);
  std::ptrdiff_t atom = -1;
  for (Op op : program) {
    if (op == Op::PushAtom) {
      ++atom;
    } else {
      plan.ops_after[static_cast<std::size_t>(atom)].push_back(op);
    }
  }
  return plan;
}

}  // namespace

std::size_t local_sweep_width(const QFFormula& phi) {
  const SweepPlan plan = plan_sweep(phi);
  std::size_t live = 0;
  std::size_t widest = 0;
  for (std::size_t i = 0; i < plan.atom_vars.size(); ++i) {
    live += plan.bind_at[i].size();
    live -= plan.release_at[i].size();
    widest = std::max(widest, live);
  }
  return widest;
}

WalkCount count_mc_local(const QFFormula& phi, const RelationalStructure& structure,
                         std::uint64_t k, std::uint64_t r, std::uint64_t a) {
  if (const auto radius = locality_radius(phi); radius > r) {
    fail("locality-violated",
         "formula is " + std::to_string(radius) + "-local, bound r=" + std::to_string(r));
  }
  if (const auto arity = max_arity(phi); arity > a) {
    fail("arity-violated", "arity " + std::to_string(arity) + " exceeds bound " + std::to_string(a));
  }
  const auto atoms = phi.atoms();
  const SweepPlan plan = plan_sweep(phi);

  // Symbol errors surface before the gate, as in count_mc.
  resolve_all(phi, make_resolver(phi, structure));
  if (k != formula_size(phi)) return 0;

  using State = std::pair<std::vector<Element>, std::vector<bool>>;
  std::vector<std::string> live;  // names aligned with State::first
  std::map<State, WalkCount> table;
  table[{{}, {}}] = 1;
  const Element universe = static_cast<Element>(structure.universe_size());

  for (std::size_t i = 0; i < atoms.size(); ++i) {
    // Slots are the live variables followed by the ones first bound here.
    std::vector<std::string> extended = live;
    for (const auto& v : plan.bind_at[i]) extended.push_back(v);
    Resolver resolver{structure, {}};
    for (std::size_t s = 0; s < extended.size(); ++s) resolver.slots[extended[s]] = s;
    const ResolvedAtom atom = resolver.atom(*atoms[i]);

    // Slots that survive past this atom.
    std::vector<std::size_t> keep;
    std::vector<std::string> next_live;
    for (std::size_t s = 0; s < extended.size(); ++s) {
      const auto& rel = plan.release_at[i];
      if (std::find(rel.begin(), rel.end(), extended[s]) == rel.end()) {
        keep.push_back(s);
        next_live.push_back(extended[s]);
      }
    }

    const std::size_t fresh = plan.bind_at[i].size();
    std::map<State, WalkCount> next;
    for (const auto& [state, count] : table) {
      std::vector<Element> assignment = state.first;
      assignment.resize(extended.size(), 0);
      while (true) {
        std::vector<bool> stack = state.second;
        stack.push_back(eval_atom(atom, structure, assignment));
        for (Op op : plan.ops_after[i]) apply(op, stack);
        std::vector<Element> kept;
        kept.reserve(keep.size());
        for (std::size_t s : keep) kept.push_back(assignment[s]);
        next[{std::move(kept), std::move(stack)}] += count;

        std::size_t pos = live.size();
        while (pos < live.size() + fresh && ++assignment[pos] == universe) assignment[pos++] = 0;
        if (pos == live.size() + fresh) break;
      }
    }
    table = std::move(next);
    live = std::move(next_live);
  }

  WalkCount total = 0;
  for (const auto& [state, count] : table) {
    if (state.second.size() == 1 && state.second.front()) total += count;
  }
  return total;
}

}  // namespace paracount
