#ifndef CONTINGENT_GENERATE_HPP
#define CONTINGENT_GENERATE_HPP

#include <cstddef>
#include <random>

#include "contingent/assessment.hpp"

namespace contingent {

// Seeded generators for property tests and the `generate` command.

Formula random_formula(std::mt19937_64& rng, const Language& lang, std::size_t depth);

struct RandomAssessmentOptions {
  std::size_t atoms = 3;
  std::size_t base_formulas = 4;
  long denominator = 12;
};

/// A universe closed under conjunction (up to equivalence) whose values are
/// monotone in the entailment order, so NT, E and I hold by construction.
/// Equivalent members share one value.
Assessment random_ordered_assessment(std::mt19937_64& rng, const RandomAssessmentOptions& options = {});

}  // namespace contingent

#endif  // CONTINGENT_GENERATE_HPP
