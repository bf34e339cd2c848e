#include "contingent/generate.hpp"

#include <algorithm>
#include <map>

namespace contingent {

Formula random_formula(std::mt19937_64& rng, const Language& lang, std::size_t depth) {
  std::uniform_int_distribution<std::size_t> atom(0, lang.atom_count() - 1);
  if (depth == 0) return Formula::atom(atom(rng));
  switch (std::uniform_int_distribution<int>(0, 3)(rng)) {
    case 0:
      return Formula::atom(atom(rng));
    case 1:
      return Formula::negation(random_formula(rng, lang, depth - 1));
    case 2:
      return Formula::conjunction(random_formula(rng, lang, depth - 1), random_formula(rng, lang, depth - 1));
    default:
      return Formula::disjunction(random_formula(rng, lang, depth - 1), random_formula(rng, lang, depth - 1));
  }
}

Assessment random_ordered_assessment(std::mt19937_64& rng, const RandomAssessmentOptions& options) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < options.atoms; ++i) names.push_back(std::string(1, static_cast<char>('p' + i)));
  const Language lang(names);

  std::vector<Formula> formulas{Formula::top(), Formula::bottom()};
  for (std::size_t i = 0; i < options.base_formulas; ++i) formulas.push_back(random_formula(rng, lang, 2));

  // One representative per truth set; close under conjunction.
  std::map<ValuationSet, Formula> by_sat;
  for (const auto& f : formulas) by_sat.try_emplace(sat_set(lang, f), f);
  for (bool grew = true; grew;) {
    grew = false;
    const std::vector<std::pair<ValuationSet, Formula>> snapshot(by_sat.begin(), by_sat.end());
    for (std::size_t i = 0; i < snapshot.size(); ++i) {
      for (std::size_t j = i + 1; j < snapshot.size(); ++j) {
        const ValuationSet meet = snapshot[i].first & snapshot[j].first;
        if (by_sat.try_emplace(meet, Formula::conjunction(snapshot[i].second, snapshot[j].second)).second) grew = true;
      }
    }
  }

  // Values in order of truth-set size keep every subset below its supersets.
  std::vector<ValuationSet> order;
  for (const auto& [s, f] : by_sat) order.push_back(s);
  std::stable_sort(order.begin(), order.end(),
                   [](const ValuationSet& a, const ValuationSet& b) { return a.count() < b.count(); });
  std::map<ValuationSet, Rational> value;
  for (const auto& s : order) {
    Rational v;
    if (s.none()) {
      v = 0;
    } else if (s.all()) {
      v = 1;
    } else {
      Rational lower = 0;
      for (const auto& [t, tv] : value) {
        if (t.is_subset_of(s) && tv > lower) lower = tv;
      }
      const long d = options.denominator;
      long first = 0;
      while (ratio(first, d) < lower) ++first;
      v = ratio(std::uniform_int_distribution<long>(first, d)(rng), d);
    }
    value.emplace(s, v);
  }

  std::vector<std::pair<Formula, Rational>> entries;
  std::map<std::string, bool> seen;
  for (const auto& f : formulas) {
    if (seen.emplace(lang.print(f), true).second) entries.emplace_back(f, value.at(sat_set(lang, f)));
  }
  for (const auto& [s, f] : by_sat) {
    if (seen.emplace(lang.print(f), true).second) entries.emplace_back(f, value.at(s));
  }
  return Assessment(lang, entries);
}

}  // namespace contingent
