#include "contingent/construct.hpp"

#include <algorithm>
#include <set>

#include "contingent/error.hpp"
#include "contingent/simplex.hpp"

namespace contingent {

std::string construction_id(Construction c) {
  switch (c) {
    case Construction::kProduct:
      return "product";
    case Construction::kCanonicalSound:
      return "canonical-sound";
    case Construction::kIntervalAdditive:
      return "interval-additive";
    case Construction::kBeliefLift:
      return "belief-lift";
    case Construction::kAdditiveSound:
      return "additive-sound";
  }
  return {};
}

std::optional<Construction> parse_construction_id(const std::string& id) {
  for (Construction c : {Construction::kProduct, Construction::kCanonicalSound, Construction::kIntervalAdditive,
                         Construction::kBeliefLift, Construction::kAdditiveSound}) {
    if (construction_id(c) == id) return c;
  }
  return std::nullopt;
}

namespace {

void require(const AxiomReport& report, const char* builder) {
  if (report.pass) return;
  throw PreconditionError(std::string(builder) + " needs " + axiom_title(report.axiom) + "; violated at " +
                          describe(report.violations.front()));
}

// Re-verifies the representation; a failure here is a bug, not bad input.
void certify_represents(BuildOutcome& out, const Assessment& a) {
  const RepresentationCheck check = represents(out.model, a);
  if (!check.represents) throw Error("internal error: constructed model does not represent the assessment");
  out.certificate.push_back("represents: lambda(t(phi)) = pi(phi) for all " + std::to_string(a.size()) +
                            " members");
}

std::vector<std::string> valuation_labels(const Language& lang) {
  std::vector<std::string> labels;
  for (std::size_t v = 0; v < lang.valuation_count(); ++v) labels.push_back(lang.valuation_label(v));
  return labels;
}

std::vector<std::pair<Formula, Event>> semantic_truth(const Assessment& a) {
  std::vector<std::pair<Formula, Event>> truth;
  for (const auto& e : a.entries()) truth.emplace_back(e.formula, e.sat);
  return truth;
}

}  // namespace

BuildOutcome build_product_model(const Assessment& a, std::size_t max_coordinates) {
  require(check_nt(a), "the product construction");
  std::vector<const AssessmentEntry*> coords;
  for (const auto& e : a.entries()) {
    if (!e.formula.is_constant()) coords.push_back(&e);
  }
  const std::size_t k = coords.size();
  if (k > max_coordinates) {
    throw PreconditionError("the product construction needs " + std::to_string(k) + " coordinates (limit " +
                            std::to_string(max_coordinates) + ")");
  }

  const std::size_t n = std::size_t{1} << k;
  std::vector<std::string> states;
  std::vector<Rational> masses;
  for (std::size_t mask = 0; mask < n; ++mask) {
    std::string label = "s";
    Rational mass = 1;
    for (std::size_t i = 0; i < k; ++i) {
      const bool on = (mask >> i) & 1U;
      label += on ? '1' : '0';
      mass *= on ? coords[i]->value : 1 - coords[i]->value;
    }
    states.push_back(std::move(label));
    masses.push_back(std::move(mass));
  }
  std::vector<std::pair<Formula, Event>> truth;
  for (std::size_t i = 0; i < k; ++i) {
    Event e(n);
    for (std::size_t mask = 0; mask < n; ++mask) {
      if ((mask >> i) & 1U) e.set(mask);
    }
    truth.emplace_back(coords[i]->formula, std::move(e));
  }

  BuildOutcome out{SubjectiveModel(a.language(), std::move(states), truth, Likelihood::additive(std::move(masses)),
                                   TruthExtension::kStoredOnly),
                   Construction::kProduct,
                   {}};
  out.certificate.push_back("lambda additive: product of coordinate marginals");
  certify_represents(out, a);
  return out;
}

BuildOutcome build_canonical_sound(const Assessment& a) {
  require(check_nt(a), "the canonical sound construction");
  require(check_e(a), "the canonical sound construction");
  const Language& lang = a.language();
  const std::size_t n = lang.valuation_count();

  std::vector<Event> generators;
  for (const auto& e : a.entries()) generators.push_back(e.sat);
  const std::vector<Event> atoms = field_atoms(n, generators);
  if (atoms.size() > 16) {
    throw PreconditionError("the generated field has " + std::to_string(atoms.size()) + " atoms (limit 16)");
  }

  std::map<Event, Rational> values;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << atoms.size()); ++mask) {
    const Event event = field_event(atoms, mask);
    const auto& members = a.members_with_sat(event);
    Rational v = 0;
    if (!members.empty()) {
      v = a.entries()[members.front()].value;
    } else {
      for (const auto& e : a.entries()) {
        if (e.sat.is_subset_of(event) && e.value > v) v = e.value;
      }
    }
    values.emplace(event, std::move(v));
  }

  BuildOutcome out{SubjectiveModel(lang, valuation_labels(lang), semantic_truth(a), Likelihood::table(n, values)),
                   Construction::kCanonicalSound,
                   {}};
  if (!classify_truth(out.model).sound) throw Error("internal error: canonical truth valuation is not sound");
  out.certificate.push_back("t sound: truth-table semantics");
  certify_represents(out, a);
  if (check_i(a).pass) {
    if (!classify_lambda(out.model).monotone) throw Error("internal error: inner extension is not monotone");
    out.certificate.push_back("lambda monotone on the generated field");
  }
  return out;
}

BuildOutcome build_interval_additive(const Assessment& a) {
  require(check_nt(a), "the interval construction");
  require(check_i(a), "the interval construction");

  std::set<Rational> distinct;
  for (const auto& e : a.entries()) distinct.insert(e.value);
  const std::vector<Rational> levels(distinct.begin(), distinct.end());  // starts at 0, ends at 1

  std::vector<std::string> states;
  std::vector<Rational> lengths;
  for (std::size_t j = 1; j < levels.size(); ++j) {
    states.push_back((j == 1 ? "[" : "(") + to_string(levels[j - 1]) + "," + to_string(levels[j]) + "]");
    lengths.push_back(levels[j] - levels[j - 1]);
  }
  const std::size_t n = states.size();
  std::vector<std::pair<Formula, Event>> truth;
  for (const auto& e : a.entries()) {
    Event segment(n);
    for (std::size_t j = 1; j < levels.size(); ++j) {
      if (levels[j] <= e.value) segment.set(j - 1);
    }
    truth.emplace_back(e.formula, std::move(segment));
  }

  BuildOutcome out{SubjectiveModel(a.language(), std::move(states), truth, Likelihood::additive(std::move(lengths)),
                                   TruthExtension::kStoredOnly),
                   Construction::kIntervalAdditive,
                   {}};
  if (!classify_truth(out.model).monotone) throw Error("internal error: initial segments are not monotone");
  out.certificate.push_back("t monotone: nested initial segments of [0,1]");
  out.certificate.push_back("lambda additive: cell lengths");
  certify_represents(out, a);
  return out;
}

BuildOutcome build_belief_lift(const SubjectiveModel& m, const std::vector<Formula>& extra) {
  const TruthFlags truth_flags = classify_truth(m);
  if (!truth_flags.sound) throw PreconditionError("the belief lift needs a sound truth valuation");
  const std::size_t n = m.state_count();
  if (n > 16) throw PreconditionError("the belief lift supports at most 16 states");

  std::vector<Rational> dense(std::size_t{1} << n);
  for (std::uint64_t mask = 0; mask < dense.size(); ++mask) {
    const Event e = Event::from_mask(n, mask);
    auto v = m.lambda().find(e);
    if (!v) throw PreconditionError("the belief lift needs lambda on every event; missing {" + m.event_label(e) + "}");
    dense[mask] = *v;
  }
  const std::vector<Rational> masses = mobius(dense);

  std::vector<std::uint64_t> focal;
  for (std::uint64_t mask = 1; mask < masses.size(); ++mask) {
    if (masses[mask] < 0) {
      throw PreconditionError("lambda is not a belief function: Moebius mass " + to_string(masses[mask]) + " on {" +
                              m.event_label(Event::from_mask(n, mask)) + "}");
    }
    if (masses[mask] > 0) focal.push_back(mask);
  }

  std::vector<std::string> states;
  std::vector<Rational> point_masses;
  for (std::uint64_t mask : focal) {
    std::string label = "{";
    for (std::size_t i = 0; i < n; ++i) {
      if ((mask >> i) & 1U) label += (label.size() > 1 ? "," : "") + m.states()[i];
    }
    states.push_back(label + "}");
    point_masses.push_back(masses[mask]);
  }
  // The lifted valuation is not a homomorphism, so every formula it must
  // answer for is tabulated here.
  std::vector<std::pair<Formula, Event>> source;
  for (const auto& entry : m.truth_table()) source.emplace_back(entry.formula, entry.event);
  for (const auto& f : extra) source.emplace_back(f, m.truth(f));
  std::vector<std::pair<Formula, Event>> truth;
  for (const auto& [f, e] : source) {
    const std::uint64_t target = e.to_mask();
    Event lifted(focal.size());
    for (std::size_t i = 0; i < focal.size(); ++i) {
      if ((focal[i] & ~target) == 0) lifted.set(i);
    }
    truth.emplace_back(f, std::move(lifted));
  }

  BuildOutcome out{SubjectiveModel(m.language(), std::move(states), truth,
                                   Likelihood::additive(std::move(point_masses)), TruthExtension::kStoredOnly),
                   Construction::kBeliefLift,
                   {}};
  for (const auto& [f, e] : source) {
    if (out.model.lambda().at(out.model.truth(f)) != m.lambda().at(e)) {
      throw Error("internal error: belief lift changed lambda(t(" + m.language().print(f) + "))");
    }
  }
  out.certificate.push_back("lambda(t(phi)) preserved for all " + std::to_string(out.model.truth_table().size()) +
                            " tabulated formulas");
  const TruthFlags lifted = classify_truth(out.model);
  if (!lifted.exact || !lifted.and_distributive) throw Error("internal error: lifted truth valuation malformed");
  out.certificate.push_back("t exact and and-distributive");
  out.certificate.push_back("lambda additive: Moebius masses of the focal sets");
  return out;
}

BuildOutcome build_additive_sound(const Assessment& a, bool complete_maxent) {
  require(check_nt(a), "the additive sound construction");
  require(check_a(a), "the additive sound construction");
  const Language& lang = a.language();
  const std::size_t n = lang.valuation_count();

  std::vector<Event> generators;
  for (const auto& e : a.entries()) generators.push_back(e.sat);
  const std::vector<Event> cells = field_atoms(n, generators);

  Matrix system;
  std::vector<Rational> rhs;
  for (const auto& e : a.entries()) {
    std::vector<Rational> row;
    for (const auto& cell : cells) row.emplace_back(cell.is_subset_of(e.sat) ? 1 : 0);
    system.push_back(std::move(row));
    rhs.push_back(e.value);
  }
  const LinearSolution sol = solve_linear(system, rhs);
  if (sol.status == LinearSolution::Status::kInconsistent) {
    throw PreconditionError("no additive extension: the assessed values are jointly inconsistent");
  }
  std::vector<Rational> cell_mass = sol.x;
  if (sol.status == LinearSolution::Status::kUnderdetermined) {
    // The equations leave freedom, but nonnegativity may still pin every
    // cell; decide by minimizing and maximizing each cell mass.
    LinearProgram lp{system, std::vector<Sense>(system.size(), Sense::kEqual), rhs, {}};
    for (std::size_t c = 0; c < cells.size(); ++c) {
      lp.c.assign(cells.size(), Rational(0));
      lp.c[c] = 1;
      const LpResult hi = maximize(lp);
      if (hi.status == LpResult::Status::kInfeasible) {
        throw PreconditionError("no additive extension: no nonnegative cell masses reproduce the values");
      }
      lp.c[c] = -1;
      const LpResult lo = maximize(lp);
      if (hi.value != -lo.value) {
        throw PreconditionError("universe under-determined: the mass of cell {" + lang.valuation_label(cells[c].indices()[0]) +
                                (cells[c].count() > 1 ? ",..." : "") + "} ranges over [" + to_string(-lo.value) + ", " +
                                to_string(hi.value) + "]");
      }
      cell_mass[c] = hi.value;
    }
  }

  std::vector<Rational> masses(n, Rational(0));
  bool filled = false;
  for (std::size_t c = 0; c < cells.size(); ++c) {
    if (cell_mass[c] < 0) throw PreconditionError("no additive extension: negative mass " + to_string(cell_mass[c]));
    const auto members = cells[c].indices();
    if (members.size() > 1) {
      if (!complete_maxent) {
        throw PreconditionError("universe under-determined: the members do not separate valuations " +
                                lang.valuation_label(members[0]) + " and " + lang.valuation_label(members[1]));
      }
      filled = true;
    }
    for (std::size_t v : members) masses[v] = cell_mass[c] / static_cast<long>(members.size());
  }

  BuildOutcome out{
      SubjectiveModel(lang, valuation_labels(lang), semantic_truth(a), Likelihood::additive(std::move(masses))),
      Construction::kAdditiveSound,
      {},
      !filled};
  out.certificate.push_back("t sound: truth-table semantics");
  out.certificate.push_back(filled ? "lambda additive: solved cell masses, spread uniformly (non-canonical)"
                                   : "lambda additive: unique solution of the cell-mass system");
  certify_represents(out, a);
  return out;
}

}  // namespace contingent
