#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "paracount/count.hpp"

namespace paracount {

using Element = std::uint32_t;
using Tuple = std::vector<Element>;

struct RelationSymbol {
  std::string name;
  std::size_t arity;

  friend bool operator==(const RelationSymbol&, const RelationSymbol&) = default;
};

/// Ordered relation symbols and constants. Names are unique, arities >= 1.
class Vocabulary {
 public:
  Vocabulary() = default;
  /// Throws bad-vocabulary on duplicate names or zero arity.
  static Vocabulary create(std::vector<RelationSymbol> relations, std::vector<std::string> constants);

  const std::vector<RelationSymbol>& relations() const noexcept { return relations_; }
  const std::vector<std::string>& constants() const noexcept { return constants_; }

  /// Index of a relation symbol, or -1.
  std::ptrdiff_t relation_index(const std::string& name) const;
  std::ptrdiff_t constant_index(const std::string& name) const;

  /// Same relation names with the same arities, order ignored.
  bool same_relations(const Vocabulary& other) const;

  friend bool operator==(const Vocabulary&, const Vocabulary&) = default;

 private:
  std::vector<RelationSymbol> relations_;
  std::vector<std::string> constants_;
};

/// Finite structure over universe 0..universe_size-1.
class RelationalStructure {
 public:
  RelationalStructure() = default;

  /// `interpretation` maps each relation name to its tuples and
  /// `constant_values` each constant name to an element. Missing relations
  /// are interpreted as empty. Throws bad-structure on out-of-range
  /// elements, wrong tuple widths, unknown names or missing constants.
  static RelationalStructure create(Vocabulary vocab, std::size_t universe_size,
                                    const std::map<std::string, std::vector<Tuple>>& interpretation,
                                    const std::map<std::string, Element>& constant_values);

  const Vocabulary& vocabulary() const noexcept { return vocab_; }
  std::size_t universe_size() const noexcept { return universe_size_; }

  const std::set<Tuple>& relation(std::size_t index) const { return relations_.at(index); }
  /// Throws symbol-not-interpreted for unknown names.
  const std::set<Tuple>& relation(const std::string& name) const;
  bool holds(std::size_t relation_index, const Tuple& tuple) const;

  Element constant(std::size_t index) const { return constants_.at(index); }
  Element constant(const std::string& name) const;

 private:
  Vocabulary vocab_;
  std::size_t universe_size_ = 0;
  std::vector<std::set<Tuple>> relations_;
  std::vector<Element> constants_;
};

struct Term {
  enum class Kind { Variable, Constant };
  Kind kind;
  std::string name;

  static Term var(std::string n) { return {Kind::Variable, std::move(n)}; }
  static Term constant(std::string n) { return {Kind::Constant, std::move(n)}; }

  friend bool operator==(const Term&, const Term&) = default;
};

/// Immutable node of a quantifier-free syntax tree.
struct FormulaNode {
  enum class Kind { And, Or, Not, Relation, Equality };
  Kind kind;
  std::vector<std::shared_ptr<const FormulaNode>> children;
  std::string relation;  // Relation only
  std::vector<Term> args;  // Relation arguments, or the two sides of Equality

  bool is_atom() const noexcept { return kind == Kind::Relation || kind == Kind::Equality; }
};

/// Quantifier-free first-order formula. Copies share the immutable tree.
class QFFormula {
 public:
  static QFFormula atom(std::string relation, std::vector<Term> args);
  static QFFormula equality(Term lhs, Term rhs);
  /// Throws invalid-formula for an empty operand list.
  static QFFormula conjunction(const std::vector<QFFormula>& operands);
  static QFFormula disjunction(const std::vector<QFFormula>& operands);
  static QFFormula negation(const QFFormula& operand);

  const FormulaNode& root() const noexcept { return *root_; }

  /// Atoms in the order-respecting depth-first traversal.
  std::vector<const FormulaNode*> atoms() const;

  /// Variable names in order of first occurrence in the depth-first run.
  std::vector<std::string> free_variables() const;

  /// Consistently renames variables; names absent from the map are kept.
  QFFormula rename(const std::map<std::string, std::string>& mapping) const;

 private:
  explicit QFFormula(std::shared_ptr<const FormulaNode> root) : root_(std::move(root)) {}
  std::shared_ptr<const FormulaNode> root_;
};

/// Number of syntax-tree nodes (connectives plus atoms).
std::uint64_t formula_size(const QFFormula& phi);

/// Least r such that atoms sharing a variable are at most r apart in the
/// depth-first atom order.
std::uint64_t locality_radius(const QFFormula& phi);

/// Largest relation arity among the atoms; 0 when only equalities occur.
std::uint64_t max_arity(const QFFormula& phi);

/// Truth of phi under `assignment` (aligned with free_variables()).
bool evaluate(const QFFormula& phi, const RelationalStructure& structure,
              const std::vector<Element>& assignment);

/// |phi(A)| when k = |phi|, else 0. Brute-force enumeration over
/// dom(A)^v. Throws symbol-not-interpreted / arity-mismatch.
WalkCount count_mc(const QFFormula& phi, const RelationalStructure& structure, std::uint64_t k);

/// Same value as count_mc, computed by a sweep over the depth-first atom
/// order that keeps only variables still referenced by a later atom,
/// together with the pending evaluation stack of the syntax tree.
/// Throws locality-violated unless locality_radius(phi) <= r and
/// arity-violated unless max_arity(phi) <= a.
WalkCount count_mc_local(const QFFormula& phi, const RelationalStructure& structure,
                         std::uint64_t k, std::uint64_t r, std::uint64_t a);

/// Widest table (distinct live-variable count) the sweep would use; exposed
/// so callers can check it against the a*r bound.
std::size_t local_sweep_width(const QFFormula& phi);

}  // namespace paracount
