#ifndef CONTINGENT_GAMES_HPP
#define CONTINGENT_GAMES_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "contingent/assessment.hpp"
#include "contingent/model.hpp"

namespace contingent {

/// A state-indexed payoff vector.
using PayoffVector = std::vector<Rational>;

/// Finitely supported map from formulas to nonnegative payoffs.
class Strategy {
 public:
  /// Throws InputError on a negative payoff.
  Strategy(std::string name, std::vector<std::pair<Formula, Rational>> payoffs);

  const std::string& name() const { return name_; }
  const std::vector<std::pair<Formula, Rational>>& payoffs() const { return payoffs_; }
  std::vector<Formula> support() const;

 private:
  std::string name_;
  std::vector<std::pair<Formula, Rational>> payoffs_;
};

/// x(w) = sum of s(phi) over the support formulas phi with w in t(phi).
/// Throws PreconditionError unless t is sound on the stored formulas and the
/// support (and stored compounds agree with the atoms they are built from).
PayoffVector t_circ(const SubjectiveModel& m, const Strategy& s);

struct Layer {
  Rational level;
  std::string formula;  // canonical text
  Formula formula_tree;
  Event event;  // the upper level set {x >= level}
};

/// Levels in decreasing order, each with a formula whose truth event is its
/// upper level set; levels equal to 0 are omitted. Preimages are searched
/// among T and F, `hints`, the stored formulas, pairwise conjunctions of
/// hints, then a normal form over the stored atoms.
/// Throws PreconditionError on negative payoffs or an upper set without a
/// formula preimage.
std::vector<Layer> layer_decompose(const PayoffVector& x, const SubjectiveModel& m,
                                   const std::vector<Formula>& hints = {});

/// Sum of (level_k - level_{k+1}) over the indicators of `events`.
PayoffVector layers_to_vector(const std::vector<Layer>& layers, std::size_t state_count);

/// The layers of t_circ(s) on the sound `source`, re-read through the truth
/// valuation of `target` (exact t', additive lambda'). A layer whose formula
/// the target does not store uses any stored target formula with the same
/// source event; layers of source likelihood 0 without such a formula
/// contribute nothing (they are lambda'-null). Throws PreconditionError on a
/// representation mismatch between the models or when no target event exists.
PayoffVector t_bullet(const SubjectiveModel& source, const SubjectiveModel& target, const Strategy& s);

struct IntegralCheck {
  bool equal = false;
  Rational source_value;  // Choquet integral of t_circ(s) under lambda
  Rational target_value;  // integral of t_bullet(s) under lambda'
};

IntegralCheck verify_integral_equality(const SubjectiveModel& source, const SubjectiveModel& target,
                                       const Strategy& s);

/// One binary coordinate per relevant base event; a state is a bit mask over
/// the coordinates.
class MaximalModel {
 public:
  /// Drops empty / full / repeated events; throws PreconditionError beyond 16
  /// coordinates.
  MaximalModel(std::size_t base_state_count, const std::vector<Event>& relevant_events);

  const std::vector<Event>& coordinates() const { return coordinates_; }
  std::size_t state_count() const { return std::size_t{1} << coordinates_.size(); }
  /// E.g. "(1,0)" with coordinate 0 first.
  std::string state_label(std::size_t state) const;
  /// Cylinder of a base event: all states for the full event, none for the
  /// empty one. Throws PreconditionError for events that are not coordinates.
  Event cylinder(const Event& base_event) const;
  /// The maximal-model payoff of a layered base vector.
  PayoffVector payoff(const std::vector<Layer>& layers) const;

 private:
  std::size_t base_states_;
  std::vector<Event> coordinates_;
};

/// Coordinates are the upper level sets of the strategies' base vectors.
MaximalModel maximal_model(const SubjectiveModel& base, const std::vector<Strategy>& strategies);

struct DominanceResult {
  bool dominated = false;
  /// Strict mode: the optimal uniform margin. Weak mode: the optimal total
  /// slack over distinct payoff profiles.
  Rational epsilon;
  /// Optimal mixture over the alternatives (always reported).
  std::vector<Rational> mixture;
  /// When undominated: a probability over states under which x is a best
  /// reply (strictly positive in weak mode).
  std::vector<Rational> prior;
};

/// Whether some mixture of `alternatives` beats x at every state (strict) or
/// weakly everywhere and strictly somewhere (weak). Solved as exact LPs.
/// Throws InputError on an empty alternative list or mismatched lengths.
DominanceResult pointwise_undominated(const PayoffVector& x, const std::vector<PayoffVector>& alternatives,
                                      bool weak = false);

struct RationalizeOptions {
  bool additive_only = false;
  bool weak = false;
  /// A proposed rationale on the base states, checked before the LP witness.
  std::optional<Likelihood> candidate;
};

struct RationalizabilityResult {
  bool rationalizable = false;
  std::string method;  // "maximal-model" or "additive"
  std::vector<PayoffVector> base_vectors;
  std::vector<PayoffVector> tested_vectors;  // the vectors the LP saw
  std::optional<MaximalModel> maximal;
  DominanceResult dominance;

  /// The witness derived from the LP prior, with each strategy's Choquet
  /// value under it, re-verified on the base model.
  std::optional<Likelihood> lp_witness;
  std::vector<Rational> lp_values;
  bool lp_witness_verified = false;

  bool candidate_given = false;
  bool candidate_verified = false;
  std::vector<Rational> candidate_values;
};

/// Decides whether strategy `chosen` maximizes the Choquet integral over
/// `strategies` for some likelihood on the sound base model.
RationalizabilityResult rationalizable(const SubjectiveModel& base, const std::vector<Strategy>& strategies,
                                       std::size_t chosen, const RationalizeOptions& options = {});

}  // namespace contingent

#endif  // CONTINGENT_GAMES_HPP
