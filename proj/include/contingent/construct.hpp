#ifndef CONTINGENT_CONSTRUCT_HPP
#define CONTINGENT_CONSTRUCT_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "contingent/assessment.hpp"
#include "contingent/model.hpp"

namespace contingent {

enum class Construction { kProduct, kCanonicalSound, kIntervalAdditive, kBeliefLift, kAdditiveSound };

/// "product", "canonical-sound", "interval-additive", "belief-lift",
/// "additive-sound".
std::string construction_id(Construction c);
std::optional<Construction> parse_construction_id(const std::string& id);

struct BuildOutcome {
  SubjectiveModel model;
  Construction construction;
  /// Postconditions re-verified on the finished model.
  std::vector<std::string> certificate;
  /// False when an arbitrary completion was used (additive-sound with
  /// maximum-entropy filling).
  bool canonical = true;
};

/// One independent binary coordinate per non-constant member; the product
/// measure has marginal pi(phi) on coordinate phi. Needs NT.
/// Throws PreconditionError on NT failure or more than `max_coordinates`
/// coordinates.
BuildOutcome build_product_model(const Assessment& a, std::size_t max_coordinates = 16);

/// States are the valuations and t is the truth-table semantics. lambda lives
/// on the field generated by the members' valuation sets and takes
/// max{pi(phi) : sat(phi) inside E} off the members. Needs NT and E.
BuildOutcome build_canonical_sound(const Assessment& a);

/// States are the cells of the partition of [0, 1] cut at the distinct
/// values of pi; t(phi) is the initial segment [0, pi(phi)] and lambda is
/// cell length. Needs NT and I.
BuildOutcome build_interval_additive(const Assessment& a);

/// States are the focal sets (positive Moebius mass) of lambda;
/// t(phi) = {A : A inside t'(phi)} and lambda is additive with the Moebius
/// masses. Needs a sound t and lambda tabulated on every event. The lifted
/// t is tabulated on the stored formulas plus `extra` and answers for
/// nothing else. Throws PreconditionError on a negative mass.
BuildOutcome build_belief_lift(const SubjectiveModel& m, const std::vector<Formula>& extra = {});

/// Valuation states with t the semantics and lambda the additive extension
/// of pi. Needs NT and A. The masses of the cells of the generated field are
/// solved exactly; cells with several valuations leave the universe
/// under-determined unless `complete_maxent` spreads their mass uniformly.
BuildOutcome build_additive_sound(const Assessment& a, bool complete_maxent = false);

}  // namespace contingent

#endif  // CONTINGENT_CONSTRUCT_HPP
