#ifndef CONTINGENT_MODEL_HPP
#define CONTINGENT_MODEL_HPP

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "contingent/assessment.hpp"
#include "contingent/bitset.hpp"
#include "contingent/logic.hpp"
#include "contingent/rational.hpp"

namespace contingent {

/// A likelihood appraisal: a set function on events of a finite state space
/// with value 0 on the empty event and 1 on the whole space.
///
/// Two storage forms exist. An additive appraisal keeps one point mass per
/// state and is total on every event. A tabulated appraisal keeps explicit
/// event values; events outside the table are outside its domain.
class Likelihood {
 public:
  Likelihood() = default;

  /// Point masses must be nonnegative and sum to 1.
  static Likelihood additive(std::vector<Rational> masses);
  /// Values must lie in [0, 1]. The empty event and the full event are
  /// added as 0 and 1 when absent and rejected when given otherwise.
  static Likelihood table(std::size_t state_count, std::map<Event, Rational> values);
  /// The capacity that is 1 on the full event and 0 everywhere else,
  /// tabulated on every event; at most 16 states.
  static Likelihood vacuous(std::size_t state_count);
  /// Only the empty and full events are known.
  static Likelihood unspecified(std::size_t state_count);

  std::size_t state_count() const { return states_; }
  bool is_additive_form() const { return additive_; }
  /// Point masses; empty unless is_additive_form().
  const std::vector<Rational>& masses() const { return masses_; }
  /// Explicit values; empty for the additive form.
  const std::map<Event, Rational>& values() const { return values_; }

  std::optional<Rational> find(const Event& e) const;
  /// Throws PreconditionError when `e` is outside the domain.
  Rational at(const Event& e) const;

 private:
  std::size_t states_ = 0;
  bool additive_ = false;
  std::vector<Rational> masses_;
  std::map<Event, Rational> values_;
};

struct TruthEntry {
  Formula formula;
  std::string text;
  Event event;
};

/// How truth() answers for formulas without a stored event.
enum class TruthExtension {
  kHomomorphic,  // through the connectives; meaningful for sound valuations
  kStoredOnly,   // refuse; for valuations that are not homomorphisms
};

/// A subjective model (states, truth valuation, likelihood appraisal).
///
/// The truth valuation is stored per formula. truth() answers for a stored
/// formula directly and otherwise, under kHomomorphic, extends through the
/// connectives, which requires every atom reached to be stored.
class SubjectiveModel {
 public:
  /// Throws InputError on duplicate or empty state labels, events of the wrong
  /// size, conflicting entries for one formula, t(T) other than all states,
  /// t(F) other than the empty event, or a likelihood over another state count.
  SubjectiveModel(Language lang, std::vector<std::string> states,
                  const std::vector<std::pair<Formula, Event>>& truth, Likelihood lambda,
                  TruthExtension extension = TruthExtension::kHomomorphic);

  const Language& language() const { return lang_; }
  const std::vector<std::string>& states() const { return states_; }
  std::size_t state_count() const { return states_.size(); }
  /// Stored entries in canonical-text order (T and F included).
  const std::vector<TruthEntry>& truth_table() const { return truth_; }
  const Likelihood& lambda() const { return lambda_; }
  TruthExtension extension() const { return extension_; }

  std::optional<Event> stored_truth(const Formula& f) const;
  /// Throws PreconditionError when an atom without a stored event is reached,
  /// or for any unstored formula other than T and F under kStoredOnly.
  Event truth(const Formula& f) const;

  Event empty_event() const { return Event(states_.size()); }
  Event full_event() const { return Event(states_.size(), true); }
  /// State labels joined by '|' in state order; "" for the empty event.
  std::string event_label(const Event& e) const;
  /// Inverse of event_label. Throws InputError on unknown labels.
  Event parse_event(const std::string& label) const;

 private:
  Language lang_;
  std::vector<std::string> states_;
  std::vector<TruthEntry> truth_;
  std::map<std::string, std::size_t> by_text_;
  Likelihood lambda_;
  TruthExtension extension_ = TruthExtension::kHomomorphic;
};

/// The atoms (minimal nonempty members) of the field of events generated by
/// `generators` over `state_count` states, ordered by their smallest state.
std::vector<Event> field_atoms(std::size_t state_count, const std::vector<Event>& generators);
/// Union of the atoms selected by the bits of `mask`.
Event field_event(const std::vector<Event>& atoms, std::uint64_t mask);

struct PropertyWitness {
  std::string property;
  std::vector<std::string> items;  // formulas or event labels
};

struct TruthFlags {
  bool exact = true;
  bool monotone = true;
  bool symmetric = true;
  bool and_distributive = true;
  bool sound = true;
  std::vector<PropertyWitness> witnesses;
};

/// Grades the truth valuation over `formulas` (the stored formulas when the
/// list is empty). Exactness and monotonicity range over all pairs;
/// symmetry and conjunction-distributivity over members of the form !phi or
/// (phi & psi) whose operands are also listed.
TruthFlags classify_truth(const SubjectiveModel& m, const std::vector<Formula>& formulas = {});

struct LikelihoodFlags {
  bool symmetric = true;
  bool monotone = true;
  bool totally_monotone = true;
  bool additive = true;
  std::size_t field_atom_count = 0;
  std::vector<PropertyWitness> witnesses;
};

/// Grades lambda over the field generated by the stored truth events. Total
/// monotonicity is decided by Moebius masses over the field atoms.
/// Throws PreconditionError when lambda is undefined on a field event or the
/// field has more than 20 atoms.
LikelihoodFlags classify_lambda(const SubjectiveModel& m);

/// Moebius transform of a set function given densely by subset mask over
/// n = log2(size) points: m(A) = sum over B subset of A of (-1)^|A\B| f(B).
/// Throws PreconditionError unless the size is a power of two with n <= 20.
std::vector<Rational> mobius(const std::vector<Rational>& by_mask);
/// Zeta transform: f(B) = sum over A subset of B of m(A).
std::vector<Rational> inverse_mobius(const std::vector<Rational>& masses);

/// Choquet integral of a nonnegative payoff vector; `lambda` is queried only
/// on the upper level sets carrying a nonzero coefficient.
Rational choquet(const std::vector<Rational>& x, const std::function<Rational(const Event&)>& lambda);
/// Throws PreconditionError on negative payoffs or upper sets outside the
/// domain of `lambda`.
Rational choquet(const std::vector<Rational>& x, const Likelihood& lambda);
/// Payoffs of any sign: integrates x - c for c = min(x) and adds c back.
Rational choquet_signed(const std::vector<Rational>& x, const Likelihood& lambda);

struct Residual {
  std::string formula;
  Rational pi;
  std::optional<Rational> lambda;  // empty when lambda(t(phi)) is undefined
  std::string note;                // why lambda is missing, if it is
};

struct RepresentationCheck {
  bool represents = true;
  std::vector<Residual> residuals;  // one per member of the universe
};

/// lambda(t(phi)) == pi(phi) for every phi in the assessed universe.
RepresentationCheck represents(const SubjectiveModel& m, const Assessment& a);

}  // namespace contingent

#endif  // CONTINGENT_MODEL_HPP
