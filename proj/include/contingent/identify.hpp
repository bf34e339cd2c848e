#ifndef CONTINGENT_IDENTIFY_HPP
#define CONTINGENT_IDENTIFY_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "contingent/assessment.hpp"
#include "contingent/logic.hpp"

namespace contingent {

struct ImplicationVerdict {
  std::string antecedent;
  std::string consequent;
  bool logically_valid = true;
  bool understood = true;
  Rational margin;  // pi(consequent) - pi(antecedent)
};

/// One verdict per ordered pair of distinct members where the first entails
/// the second; understood iff the margin is nonnegative. Needs NT.
std::vector<ImplicationVerdict> understood_implications(const Assessment& a);

struct SubtheoryResult {
  /// The identified sub-theory. When several minimal valuation sets pass,
  /// this is the sub-theory common to all of them (their union).
  Theory theory;
  bool unique = true;
  /// Every minimal passing valuation set (one when unique).
  std::vector<ValuationSet> candidates;
  /// Whether the theory-relative implication check passes for `theory`.
  bool verified = true;
  std::vector<std::string> diagnostics;
};

/// Enumerates valuation sets V containing V(T); V passes when the assessment
/// satisfies implication relative to the theory of V on the universe. Passing
/// sets are closed upward, so the result is read off the minimal ones.
/// Needs I; throws PreconditionError when V(T) leaves more than
/// `max_free_valuations` valuations to choose.
SubtheoryResult largest_subtheory(const Assessment& a, const Theory& t, std::size_t max_free_valuations = 16);

/// The theory generated by the members of T assessed at exactly 1, then
/// checked against theory-relative implication. Needs IE (families up to
/// `ie_family_size`); throws PreconditionError naming the first IE violation.
SubtheoryResult subtheory_via_certainty(const Assessment& a, const Theory& t, std::size_t ie_family_size = 3);

}  // namespace contingent

#endif  // CONTINGENT_IDENTIFY_HPP
