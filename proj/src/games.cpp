#include "contingent/games.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "contingent/error.hpp"
#include "contingent/simplex.hpp"

namespace contingent {

Strategy::Strategy(std::string name, std::vector<std::pair<Formula, Rational>> payoffs)
    : name_(std::move(name)), payoffs_(std::move(payoffs)) {
  for (const auto& [f, v] : payoffs_) {
    if (v < 0) throw InputError("strategy '" + name_ + "' has negative payoff " + to_string(v) + "; shift payoffs first");
  }
}

std::vector<Formula> Strategy::support() const {
  std::vector<Formula> out;
  for (const auto& [f, v] : payoffs_) out.push_back(f);
  return out;
}

namespace {

// Truth event computed from stored atom events only; empty when some atom
// is not stored.
std::optional<Event> from_atoms(const SubjectiveModel& m, const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::kTrue:
      return m.full_event();
    case Formula::Kind::kFalse:
      return m.empty_event();
    case Formula::Kind::kAtom:
      return m.stored_truth(f);
    case Formula::Kind::kNot: {
      auto e = from_atoms(m, f.left());
      if (!e) return std::nullopt;
      return ~*e;
    }
    case Formula::Kind::kAnd:
    case Formula::Kind::kOr: {
      auto l = from_atoms(m, f.left());
      auto r = from_atoms(m, f.right());
      if (!l || !r) return std::nullopt;
      return f.kind() == Formula::Kind::kAnd ? (*l & *r) : (*l | *r);
    }
  }
  return std::nullopt;
}

void require_sound(const SubjectiveModel& m, const std::vector<Formula>& extra, const char* what) {
  std::vector<Formula> formulas;
  for (const auto& e : m.truth_table()) formulas.push_back(e.formula);
  formulas.insert(formulas.end(), extra.begin(), extra.end());
  const TruthFlags flags = classify_truth(m, formulas);
  if (!flags.sound) {
    const auto& w = flags.witnesses.front();
    std::string items;
    for (const auto& i : w.items) items += (items.empty() ? "" : ", ") + i;
    throw PreconditionError(std::string(what) + " needs a sound truth valuation; not " + w.property + " at " + items);
  }
  for (const auto& e : m.truth_table()) {
    auto h = from_atoms(m, e.formula);
    if (h && *h != e.event) {
      throw PreconditionError(std::string(what) + " needs a sound truth valuation; t(" + e.text +
                              ") disagrees with its atoms");
    }
  }
}

std::string label_of(const SubjectiveModel& m, const Event& e) { return "{" + m.event_label(e) + "}"; }

}  // namespace

PayoffVector t_circ(const SubjectiveModel& m, const Strategy& s) {
  require_sound(m, s.support(), "t_circ");
  PayoffVector x(m.state_count(), Rational(0));
  for (const auto& [f, v] : s.payoffs()) {
    for (std::size_t w : m.truth(f).indices()) x[w] += v;
  }
  return x;
}

std::vector<Layer> layer_decompose(const PayoffVector& x, const SubjectiveModel& m, const std::vector<Formula>& hints) {
  if (x.size() != m.state_count()) throw PreconditionError("payoff vector and model differ in state count");
  std::set<Rational, std::greater<>> levels;
  for (const auto& v : x) {
    if (v < 0) throw PreconditionError("layer decomposition needs nonnegative payoffs");
    if (v > 0) levels.insert(v);
  }
  const Language& lang = m.language();

  auto find_preimage = [&](const Event& u) -> std::optional<Formula> {
    if (u.all()) return Formula::top();
    if (u.none()) return Formula::bottom();
    auto matches = [&](const Formula& f) {
      try {
        return m.truth(f) == u;
      } catch (const PreconditionError&) {
        return false;
      }
    };
    for (const auto& h : hints) {
      if (matches(h)) return h;
    }
    for (const auto& e : m.truth_table()) {
      if (e.event == u) return e.formula;
    }
    for (std::size_t i = 0; i < hints.size(); ++i) {
      for (std::size_t j = i + 1; j < hints.size(); ++j) {
        Formula c = Formula::conjunction(hints[i], hints[j]);
        if (matches(c)) return c;
      }
    }
    // Normal form over stored atoms: the valuations realised inside u.
    bool atoms_stored = true;
    ValuationSet inside = lang.empty_set();
    for (std::size_t w = 0; w < m.state_count() && atoms_stored; ++w) {
      std::size_t v = 0;
      for (std::size_t a = 0; a < lang.atom_count(); ++a) {
        auto e = m.stored_truth(Formula::atom(a));
        if (!e) {
          atoms_stored = false;
          break;
        }
        if (e->test(w)) v |= std::size_t{1} << a;
      }
      if (u.test(w)) inside.set(v);
    }
    if (atoms_stored) {
      Formula dnf = lang.characteristic_formula(inside);
      if (matches(dnf)) return dnf;
    }
    // Normal form over the hints and stored formulas: one conjunction of
    // literals per signature cell inside u. Fails when u splits a cell.
    std::vector<std::pair<Formula, Event>> generators;
    std::set<Event> seen;
    auto add_generator = [&](const Formula& f) {
      try {
        const Event e = m.truth(f);
        if (!e.none() && !e.all() && seen.insert(e).second) generators.emplace_back(f, e);
      } catch (const PreconditionError&) {
      }
    };
    for (const auto& h : hints) add_generator(h);
    for (const auto& e : m.truth_table()) add_generator(e.formula);
    std::map<std::vector<bool>, bool> cells;  // signature -> lies inside u
    for (std::size_t w = 0; w < m.state_count(); ++w) {
      std::vector<bool> signature;
      for (const auto& [f, e] : generators) signature.push_back(e.test(w));
      auto [it, inserted] = cells.emplace(signature, u.test(w));
      if (!inserted && it->second != u.test(w)) return std::nullopt;
    }
    std::optional<Formula> dnf;
    for (const auto& [signature, in_u] : cells) {
      if (!in_u) continue;
      std::optional<Formula> term;
      for (std::size_t i = 0; i < generators.size(); ++i) {
        Formula literal = signature[i] ? generators[i].first : Formula::negation(generators[i].first);
        term = term ? Formula::conjunction(*term, literal) : literal;
      }
      if (!term) term = Formula::top();
      dnf = dnf ? Formula::disjunction(*dnf, *term) : *term;
    }
    if (dnf && matches(*dnf)) return dnf;
    return std::nullopt;
  };

  std::vector<Layer> layers;
  for (const auto& level : levels) {
    Event u(x.size());
    for (std::size_t w = 0; w < x.size(); ++w) {
      if (x[w] >= level) u.set(w);
    }
    auto f = find_preimage(u);
    if (!f) throw PreconditionError("upper level set " + label_of(m, u) + " has no formula preimage");
    layers.push_back({level, lang.print(*f), *f, u});
  }
  return layers;
}

PayoffVector layers_to_vector(const std::vector<Layer>& layers, std::size_t state_count) {
  PayoffVector x(state_count, Rational(0));
  for (std::size_t k = 0; k < layers.size(); ++k) {
    const Rational step = layers[k].level - (k + 1 < layers.size() ? layers[k + 1].level : Rational(0));
    for (std::size_t w : layers[k].event.indices()) x[w] += step;
  }
  return x;
}

namespace {

void require_same_assessment(const SubjectiveModel& source, const SubjectiveModel& target) {
  if (source.language() != target.language()) throw InputError("models declare different atoms");
  auto compare = [&](const Formula& f, const std::string& text) {
    std::optional<Rational> sv;
    std::optional<Rational> tv;
    try {
      sv = source.lambda().find(source.truth(f));
    } catch (const PreconditionError&) {
    }
    if (auto e = target.stored_truth(f)) tv = target.lambda().find(*e);
    if (sv && tv && *sv != *tv) {
      throw PreconditionError("representation mismatch at '" + text + "': source likelihood " + to_string(*sv) +
                              ", target likelihood " + to_string(*tv));
    }
  };
  for (const auto& e : target.truth_table()) compare(e.formula, e.text);
  for (const auto& e : source.truth_table()) compare(e.formula, e.text);
}

}  // namespace

PayoffVector t_bullet(const SubjectiveModel& source, const SubjectiveModel& target, const Strategy& s) {
  if (!target.lambda().is_additive_form() && !classify_lambda(target).additive) {
    throw PreconditionError("t_bullet needs an additive target likelihood");
  }
  if (!classify_truth(target).exact) throw PreconditionError("t_bullet needs an exact target truth valuation");
  require_same_assessment(source, target);

  const PayoffVector x = t_circ(source, s);
  const std::vector<Layer> layers = layer_decompose(x, source, s.support());
  std::vector<Layer> mapped;
  for (const auto& layer : layers) {
    std::optional<Event> e = target.stored_truth(layer.formula_tree);
    if (!e) {
      for (const auto& entry : target.truth_table()) {
        try {
          if (source.truth(entry.formula) == layer.event) {
            e = entry.event;
            break;
          }
        } catch (const PreconditionError&) {
        }
      }
    }
    if (!e) {
      if (source.lambda().find(layer.event) == Rational(0)) {
        e = target.empty_event();
      } else {
        throw PreconditionError("target stores no formula for layer event " + label_of(source, layer.event));
      }
    }
    mapped.push_back({layer.level, layer.formula, layer.formula_tree, *e});
  }
  return layers_to_vector(mapped, target.state_count());
}

IntegralCheck verify_integral_equality(const SubjectiveModel& source, const SubjectiveModel& target,
                                       const Strategy& s) {
  IntegralCheck out;
  out.source_value = choquet(t_circ(source, s), source.lambda());
  out.target_value = choquet(t_bullet(source, target, s), target.lambda());
  out.equal = out.source_value == out.target_value;
  return out;
}

// ---------------------------------------------------------------------------
// Maximal model

MaximalModel::MaximalModel(std::size_t base_state_count, const std::vector<Event>& relevant_events)
    : base_states_(base_state_count) {
  for (const auto& e : relevant_events) {
    if (e.size() != base_state_count) throw InputError("relevant event over the wrong number of states");
    if (e.none() || e.all()) continue;
    if (std::find(coordinates_.begin(), coordinates_.end(), e) == coordinates_.end()) coordinates_.push_back(e);
  }
  if (coordinates_.size() > 16) {
    throw PreconditionError("the maximal model needs " + std::to_string(coordinates_.size()) +
                            " coordinates (limit 16)");
  }
}

std::string MaximalModel::state_label(std::size_t state) const {
  std::string label = "(";
  for (std::size_t c = 0; c < coordinates_.size(); ++c) {
    if (c > 0) label += ',';
    label += ((state >> c) & 1U) ? '1' : '0';
  }
  return label + ")";
}

Event MaximalModel::cylinder(const Event& base_event) const {
  if (base_event.size() != base_states_) throw PreconditionError("event over the wrong number of states");
  if (base_event.all()) return Event(state_count(), true);
  if (base_event.none()) return Event(state_count());
  auto it = std::find(coordinates_.begin(), coordinates_.end(), base_event);
  if (it == coordinates_.end()) throw PreconditionError("event is not a coordinate of the maximal model");
  const std::size_t c = static_cast<std::size_t>(it - coordinates_.begin());
  Event out(state_count());
  for (std::size_t s = 0; s < state_count(); ++s) {
    if ((s >> c) & 1U) out.set(s);
  }
  return out;
}

PayoffVector MaximalModel::payoff(const std::vector<Layer>& layers) const {
  std::vector<Layer> lifted;
  for (const auto& layer : layers) lifted.push_back({layer.level, layer.formula, layer.formula_tree, cylinder(layer.event)});
  return layers_to_vector(lifted, state_count());
}

MaximalModel maximal_model(const SubjectiveModel& base, const std::vector<Strategy>& strategies) {
  std::vector<Event> events;
  for (const auto& s : strategies) {
    for (const auto& layer : layer_decompose(t_circ(base, s), base, s.support())) events.push_back(layer.event);
  }
  return MaximalModel(base.state_count(), events);
}

// ---------------------------------------------------------------------------
// Dominance

namespace {

struct Profiles {
  std::vector<std::vector<Rational>> rows;  // per distinct profile: x, then alternatives
  std::vector<std::vector<std::size_t>> states;
};

Profiles group_profiles(const PayoffVector& x, const std::vector<PayoffVector>& alternatives) {
  Profiles out;
  std::map<std::vector<Rational>, std::size_t> index;
  for (std::size_t w = 0; w < x.size(); ++w) {
    std::vector<Rational> profile{x[w]};
    for (const auto& alt : alternatives) profile.push_back(alt[w]);
    auto [it, inserted] = index.try_emplace(profile, out.rows.size());
    if (inserted) {
      out.rows.push_back(std::move(profile));
      out.states.emplace_back();
    }
    out.states[it->second].push_back(w);
  }
  return out;
}

std::vector<Rational> spread_to_states(const Profiles& p, const std::vector<Rational>& by_profile, std::size_t n) {
  std::vector<Rational> prior(n, Rational(0));
  for (std::size_t r = 0; r < p.rows.size(); ++r) {
    const Rational share = by_profile[r] / static_cast<long>(p.states[r].size());
    for (std::size_t w : p.states[r]) prior[w] = share;
  }
  return prior;
}

void require_optimal(const LpResult& r, const char* what) {
  if (r.status != LpResult::Status::kOptimal) throw Error(std::string("internal error: ") + what + " LP not optimal");
}

}  // namespace

DominanceResult pointwise_undominated(const PayoffVector& x, const std::vector<PayoffVector>& alternatives, bool weak) {
  if (alternatives.empty()) throw InputError("dominance test needs at least one alternative");
  for (const auto& alt : alternatives) {
    if (alt.size() != x.size()) throw InputError("payoff vectors differ in length");
  }
  const Profiles p = group_profiles(x, alternatives);
  const std::size_t k = alternatives.size();
  const std::size_t r = p.rows.size();
  DominanceResult out;

  // Primal: mixture weights mu_1..mu_k, then either a free margin
  // (strict) or one slack per profile (weak).
  LinearProgram primal;
  const std::size_t vars = weak ? k + r : k + 2;
  primal.c.assign(vars, Rational(0));
  for (std::size_t i = 0; i < r; ++i) {
    std::vector<Rational> row(vars, Rational(0));
    for (std::size_t a = 0; a < k; ++a) row[a] = p.rows[i][a + 1];
    if (weak) {
      row[k + i] = -1;
      primal.sense.push_back(Sense::kEqual);
    } else {
      row[k] = -1;
      row[k + 1] = 1;
      primal.sense.push_back(Sense::kGreaterEqual);
    }
    primal.a.push_back(std::move(row));
    primal.b.push_back(p.rows[i][0]);
  }
  std::vector<Rational> simplex_row(vars, Rational(0));
  for (std::size_t a = 0; a < k; ++a) simplex_row[a] = 1;
  primal.a.push_back(std::move(simplex_row));
  primal.sense.push_back(Sense::kEqual);
  primal.b.push_back(1);
  if (weak) {
    for (std::size_t i = 0; i < r; ++i) primal.c[k + i] = 1;
  } else {
    primal.c[k] = 1;
    primal.c[k + 1] = -1;
  }
  const LpResult pr = maximize(primal);
  if (weak && pr.status == LpResult::Status::kInfeasible) {
    // No mixture weakly dominates x.
    out.dominated = false;
    out.epsilon = 0;
  } else {
    require_optimal(pr, "dominance");
    out.epsilon = pr.value;
    out.mixture.assign(pr.x.begin(), pr.x.begin() + static_cast<std::ptrdiff_t>(k));
    out.dominated = pr.value > 0;
  }
  if (out.dominated) return out;

  // Prior: probabilities over profiles under which x is a best reply; in weak
  // mode every profile gets at least delta, and delta is maximized.
  LinearProgram dual;
  const std::size_t dvars = weak ? r + 1 : r;
  dual.c.assign(dvars, Rational(0));
  for (std::size_t a = 0; a < k; ++a) {
    std::vector<Rational> row(dvars, Rational(0));
    for (std::size_t i = 0; i < r; ++i) row[i] = p.rows[i][0] - p.rows[i][a + 1];
    dual.a.push_back(std::move(row));
    dual.sense.push_back(Sense::kGreaterEqual);
    dual.b.push_back(0);
  }
  std::vector<Rational> total(dvars, Rational(0));
  for (std::size_t i = 0; i < r; ++i) total[i] = 1;
  dual.a.push_back(std::move(total));
  dual.sense.push_back(Sense::kEqual);
  dual.b.push_back(1);
  if (weak) {
    for (std::size_t i = 0; i < r; ++i) {
      std::vector<Rational> row(dvars, Rational(0));
      row[i] = 1;
      row[r] = -1;
      dual.a.push_back(std::move(row));
      dual.sense.push_back(Sense::kGreaterEqual);
      dual.b.push_back(0);
    }
    dual.c[r] = 1;
  }
  const LpResult dr = maximize(dual);
  require_optimal(dr, "prior");
  if (weak && dr.value <= 0) throw Error("internal error: weakly undominated without a positive prior");
  std::vector<Rational> by_profile(dr.x.begin(), dr.x.begin() + static_cast<std::ptrdiff_t>(r));
  out.prior = spread_to_states(p, by_profile, x.size());
  return out;
}

// ---------------------------------------------------------------------------
// Rationalizability

namespace {

// Choquet value of every strategy; empty when the likelihood misses an
// upper level set.
std::optional<std::vector<Rational>> values_under(const std::vector<PayoffVector>& vectors, const Likelihood& l) {
  std::vector<Rational> values;
  try {
    for (const auto& x : vectors) values.push_back(choquet(x, l));
  } catch (const PreconditionError&) {
    return std::nullopt;
  }
  return values;
}

bool is_best(const std::vector<Rational>& values, std::size_t chosen) {
  return std::all_of(values.begin(), values.end(), [&](const Rational& v) { return values[chosen] >= v; });
}

}  // namespace

RationalizabilityResult rationalizable(const SubjectiveModel& base, const std::vector<Strategy>& strategies,
                                       std::size_t chosen, const RationalizeOptions& options) {
  if (strategies.empty() || chosen >= strategies.size()) throw InputError("the chosen strategy is not among the alternatives");
  RationalizabilityResult out;
  out.method = options.additive_only ? "additive" : "maximal-model";
  for (const auto& s : strategies) out.base_vectors.push_back(t_circ(base, s));

  std::vector<std::vector<Layer>> layers;
  if (options.additive_only) {
    out.tested_vectors = out.base_vectors;
  } else {
    std::vector<Event> events;
    for (std::size_t i = 0; i < strategies.size(); ++i) {
      layers.push_back(layer_decompose(out.base_vectors[i], base, strategies[i].support()));
      for (const auto& l : layers.back()) events.push_back(l.event);
    }
    out.maximal.emplace(base.state_count(), events);
    for (const auto& l : layers) out.tested_vectors.push_back(out.maximal->payoff(l));
  }

  out.dominance = pointwise_undominated(out.tested_vectors[chosen], out.tested_vectors, options.weak);
  out.rationalizable = !out.dominance.dominated;

  if (out.rationalizable) {
    if (options.additive_only) {
      out.lp_witness = Likelihood::additive(out.dominance.prior);
    } else {
      std::map<Event, Rational> table;
      for (const auto& coordinate : out.maximal->coordinates()) {
        Rational v = 0;
        for (std::size_t s : out.maximal->cylinder(coordinate).indices()) v += out.dominance.prior[s];
        table.emplace(coordinate, v);
      }
      out.lp_witness = Likelihood::table(base.state_count(), std::move(table));
    }
    auto values = values_under(out.base_vectors, *out.lp_witness);
    if (!values || !is_best(*values, chosen)) throw Error("internal error: LP witness fails Choquet verification");
    out.lp_values = std::move(*values);
    out.lp_witness_verified = true;
  }

  if (options.candidate) {
    out.candidate_given = true;
    if (options.candidate->state_count() != base.state_count()) {
      throw InputError("candidate likelihood is over the wrong number of states");
    }
    if (auto values = values_under(out.base_vectors, *options.candidate)) {
      out.candidate_values = *values;
      out.candidate_verified = is_best(*values, chosen);
    }
    if (options.additive_only && !options.candidate->is_additive_form()) out.candidate_verified = false;
  }
  return out;
}

}  // namespace contingent
