#ifndef CONTINGENT_LOGIC_HPP
#define CONTINGENT_LOGIC_HPP

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "contingent/bitset.hpp"

namespace contingent {

/// Immutable propositional formula over the atoms of a Language.
///
/// Atoms are stored by index; printing and parsing go through the Language
/// that declares them. Copies share structure.
class Formula {
 public:
  enum class Kind { kTrue, kFalse, kAtom, kNot, kAnd, kOr };

  /// The constant TRUE.
  Formula();

  static Formula top();
  static Formula bottom();
  static Formula atom(std::size_t index);
  static Formula negation(Formula operand);
  static Formula conjunction(Formula left, Formula right);
  static Formula disjunction(Formula left, Formula right);
  /// Sugar: !a | b.
  static Formula implication(Formula antecedent, Formula consequent);
  /// Sugar: (!a | b) & (!b | a).
  static Formula biconditional(Formula a, Formula b);

  Kind kind() const;
  /// Only valid for kAtom.
  std::size_t atom_index() const;
  /// Operand of kNot; left operand of kAnd / kOr.
  Formula left() const;
  /// Right operand of kAnd / kOr.
  Formula right() const;

  bool is_constant() const { return kind() == Kind::kTrue || kind() == Kind::kFalse; }
  std::size_t node_count() const;
  std::size_t depth() const;

  /// Structural (syntactic) equality.
  friend bool operator==(const Formula& a, const Formula& b);
  friend bool operator!=(const Formula& a, const Formula& b) { return !(a == b); }

 private:
  struct Node {
    Kind kind;
    std::size_t atom = 0;
    std::shared_ptr<const Node> left;
    std::shared_ptr<const Node> right;
  };
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

/// A finite declared atom set (at most 16 atoms) together with the
/// valuation semantics over it. Valuation v assigns atom i the truth value of
/// bit i of v.
class Language {
 public:
  static constexpr std::size_t kMaxAtoms = 16;

  Language() = default;
  /// Throws InputError on duplicate, reserved ("T", "F") or malformed names,
  /// or more than kMaxAtoms atoms.
  explicit Language(std::vector<std::string> atoms);

  const std::vector<std::string>& atoms() const { return atoms_; }
  std::size_t atom_count() const { return atoms_.size(); }
  std::size_t valuation_count() const { return std::size_t{1} << atoms_.size(); }
  std::optional<std::size_t> find_atom(std::string_view name) const;

  /// Grammar: T | F | atom | !e | (e & e) | (e | e), plus `->` and `<->` as
  /// sugar. Parentheses may be omitted; precedence from tightest is
  /// `!`, `&`, `|`, `->` (right associative), `<->`.
  /// Throws ParseError (with a character position) or InputError for
  /// undeclared atoms.
  Formula parse(std::string_view text) const;

  /// Fully parenthesized canonical text; parse(print(f)) == f.
  std::string print(const Formula& f) const;

  ValuationSet empty_set() const { return ValuationSet(valuation_count()); }
  ValuationSet full_set() const { return ValuationSet(valuation_count(), true); }
  const ValuationSet& atom_set(std::size_t index) const { return atom_sets_.at(index); }

  /// Conjunction of literals describing valuation v, e.g. "p&!q" ("T" when
  /// there are no atoms).
  std::string valuation_label(std::size_t v) const;
  Formula valuation_formula(std::size_t v) const;
  /// A formula whose valuation set is exactly `valuations` (disjunction of
  /// valuation formulas; T / F for the full / empty set).
  Formula characteristic_formula(const ValuationSet& valuations) const;

  friend bool operator==(const Language& a, const Language& b) { return a.atoms_ == b.atoms_; }
  friend bool operator!=(const Language& a, const Language& b) { return !(a == b); }

 private:
  std::vector<std::string> atoms_;
  std::vector<ValuationSet> atom_sets_;
};

/// Classical truth-table semantics.
ValuationSet sat_set(const Language& lang, const Formula& f);

/// f entails g: sat(f) is a subset of sat(g).
bool implies(const Language& lang, const Formula& f, const Formula& g);
bool equivalent(const Language& lang, const Formula& f, const Formula& g);

/// True iff the conjunction of the generators is satisfiable.
bool theory_consistent(const Language& lang, const std::vector<Formula>& generators);

/// A consistent theory, represented by finitely many generators; it stands
/// for their closure under implication.
class Theory {
 public:
  /// Throws InputError when the generators are jointly unsatisfiable.
  Theory(Language lang, std::vector<Formula> generators, std::vector<std::string> labels = {});

  /// The theory of all formulas true on every valuation in `valuations`.
  /// Generators are taken from `candidates` when they pin the set down exactly;
  /// otherwise the characteristic formula of the set is appended.
  static Theory from_valuations(Language lang, const ValuationSet& valuations,
                                const std::vector<Formula>& candidates = {},
                                const std::vector<std::string>& candidate_labels = {});

  /// The theory of all tautologies.
  static Theory tautologies(Language lang);

  const Language& language() const { return lang_; }
  const std::vector<Formula>& generators() const { return generators_; }
  /// Source text of each generator (canonical text when none was given).
  const std::vector<std::string>& labels() const { return labels_; }
  /// Valuations satisfying every generator.
  const ValuationSet& valuations() const { return valuations_; }
  bool is_tautological() const { return valuations_.all(); }

  /// f is in the closure of the generators.
  bool contains(const Formula& f) const;
  /// g is deducible from f together with the theory.
  bool implies(const Formula& f, const Formula& g) const;

 private:
  Language lang_;
  std::vector<Formula> generators_;
  std::vector<std::string> labels_;
  ValuationSet valuations_;
};

}  // namespace contingent

#endif  // CONTINGENT_LOGIC_HPP
