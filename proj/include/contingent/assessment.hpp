#ifndef CONTINGENT_ASSESSMENT_HPP
#define CONTINGENT_ASSESSMENT_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "contingent/logic.hpp"
#include "contingent/rational.hpp"

namespace contingent {

struct AssessmentEntry {
  Formula formula;
  std::string text;  // canonical text
  ValuationSet sat;
  Rational value;
};

/// Elicited likelihoods pi over a finite formula universe.
///
/// Entries are kept in canonical-text order, which fixes the order of every
/// report derived from the assessment. TRUE and FALSE are always members:
/// when absent from the input they are added with the normalized values 1
/// and 0. Values are not range-checked here; check_nt reports them.
class Assessment {
 public:
  /// Throws InputError when two inputs print to the same canonical text.
  Assessment(Language lang, const std::vector<std::pair<Formula, Rational>>& values);

  const Language& language() const { return lang_; }
  const std::vector<AssessmentEntry>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }

  /// Syntactic lookup (by canonical text).
  std::optional<std::size_t> index_of(const Formula& f) const;
  const AssessmentEntry* find(const Formula& f) const;
  /// pi of a member; throws InputError for formulas outside the universe.
  const Rational& value(const Formula& f) const;
  /// Indices of members whose valuation set equals `s`, in canonical order.
  const std::vector<std::size_t>& members_with_sat(const ValuationSet& s) const;

 private:
  Language lang_;
  std::vector<AssessmentEntry> entries_;
  std::unordered_map<std::string, std::size_t> by_text_;
  std::unordered_map<ValuationSet, std::vector<std::size_t>> by_sat_;
};

/// Finitely supported lottery over primitive bets. Weights are positive and
/// sum to exactly one.
class Bet {
 public:
  /// Throws InputError on non-positive weights or weights not summing to 1.
  explicit Bet(std::vector<std::pair<Formula, Rational>> weights);

  static Bet primitive(Formula f);
  /// Pointwise mixture alpha * a + (1 - alpha) * b, alpha in [0, 1].
  static Bet mixture(const Rational& alpha, const Bet& a, const Bet& b);

  const std::vector<std::pair<Formula, Rational>>& weights() const { return weights_; }

 private:
  std::vector<std::pair<Formula, Rational>> weights_;
};

/// Expected value of the bet, sum of b(phi) * pi(phi). Comparing these values
/// is the preference over bets. Throws InputError when the support leaves the
/// universe.
Rational bet_value(const Assessment& a, const Bet& b);

enum class Axiom { kNT, kE, kI, kIE, kA, kSI };

/// Short id: "nt", "e", "i", "ie", "a", "s-i".
std::string axiom_id(Axiom axiom);
/// Human-readable axiom name and the condition it imposes.
std::string axiom_title(Axiom axiom);
std::optional<Axiom> parse_axiom_id(const std::string& id);

struct Violation {
  std::vector<std::string> formulas;
  Rational lhs;
  Rational rhs;
  std::string inequality;  // the violated relation, in terms of lhs / rhs
};

/// One-line rendering: formulas, both sides and the relation.
std::string describe(const Violation& v);

struct Untestable {
  std::vector<std::string> formulas;
  std::string reason;
};

struct AxiomReport {
  Axiom axiom = Axiom::kNT;
  bool pass = true;
  std::size_t tested = 0;
  std::vector<Violation> violations;
  std::vector<Untestable> untestable;
};

/// pi(T) = 1, pi(F) = 0 and every value in [0, 1].
AxiomReport check_nt(const Assessment& a);
/// Equivalent members carry equal values.
AxiomReport check_e(const Assessment& a);
/// phi entails psi implies pi(psi) >= pi(phi).
AxiomReport check_i(const Assessment& a);
/// For families {phi_1..phi_k} (k <= n_max) of members entailing psi:
/// pi(psi) + sum over even I of pi(phi_I) >= sum over odd I of pi(phi_I).
/// Families whose conjunctions are missing from the universe are untestable.
AxiomReport check_ie(const Assessment& a, std::size_t n_max = 3);
/// Disjoint phi, phi': pi(phi) + pi(phi') = pi(phi | phi'), for every member
/// equivalent to the disjunction.
AxiomReport check_a(const Assessment& a);
/// Theory-relative implication: phi entails psi under T implies
/// pi(psi) >= pi(phi).
AxiomReport check_s_i(const Assessment& a, const Theory& theory);

}  // namespace contingent

#endif  // CONTINGENT_ASSESSMENT_HPP
