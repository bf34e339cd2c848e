#include "contingent/model.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>

#include "contingent/error.hpp"

namespace contingent {

// ---------------------------------------------------------------------------
// Likelihood

Likelihood Likelihood::additive(std::vector<Rational> masses) {
  Rational total = 0;
  for (const auto& m : masses) {
    if (m < 0) throw InputError("negative point mass " + to_string(m));
    total += m;
  }
  if (total != 1) throw InputError("point masses sum to " + to_string(total) + ", not 1");
  Likelihood l;
  l.states_ = masses.size();
  l.additive_ = true;
  l.masses_ = std::move(masses);
  return l;
}

Likelihood Likelihood::table(std::size_t state_count, std::map<Event, Rational> values) {
  const Event empty(state_count);
  const Event full(state_count, true);
  for (const auto& [e, v] : values) {
    if (e.size() != state_count) throw InputError("likelihood event over the wrong number of states");
    if (v < 0 || v > 1) throw InputError("likelihood value " + to_string(v) + " outside [0, 1]");
  }
  auto check_fixed = [&values](const Event& e, int expected, const char* what) {
    auto [it, inserted] = values.try_emplace(e, expected);
    if (!inserted && it->second != expected) {
      throw InputError(std::string("likelihood of the ") + what + " event must be " + std::to_string(expected));
    }
  };
  // With no states the empty and full events coincide; the full-event rule wins.
  if (state_count > 0) check_fixed(empty, 0, "empty");
  check_fixed(full, 1, "full");
  Likelihood l;
  l.states_ = state_count;
  l.values_ = std::move(values);
  return l;
}

Likelihood Likelihood::vacuous(std::size_t state_count) {
  if (state_count > 16) throw PreconditionError("a tabulated vacuous capacity is limited to 16 states");
  std::map<Event, Rational> values;
  const std::uint64_t full = (std::uint64_t{1} << state_count) - 1;
  for (std::uint64_t mask = 1; mask < full; ++mask) values.emplace(Event::from_mask(state_count, mask), 0);
  return table(state_count, std::move(values));
}

Likelihood Likelihood::unspecified(std::size_t state_count) { return table(state_count, {}); }

std::optional<Rational> Likelihood::find(const Event& e) const {
  if (e.size() != states_) return std::nullopt;
  if (additive_) {
    Rational v = 0;
    for (std::size_t i : e.indices()) v += masses_[i];
    return v;
  }
  auto it = values_.find(e);
  if (it == values_.end()) return std::nullopt;
  return it->second;
}

Rational Likelihood::at(const Event& e) const {
  auto v = find(e);
  if (!v) throw PreconditionError("likelihood undefined on an event outside its domain");
  return *v;
}

// ---------------------------------------------------------------------------
// SubjectiveModel

SubjectiveModel::SubjectiveModel(Language lang, std::vector<std::string> states,
                                 const std::vector<std::pair<Formula, Event>>& truth, Likelihood lambda,
                                 TruthExtension extension)
    : lang_(std::move(lang)), states_(std::move(states)), lambda_(std::move(lambda)), extension_(extension) {
  std::set<std::string> seen;
  for (const auto& s : states_) {
    if (s.empty() || s.find('|') != std::string::npos) throw InputError("malformed state label '" + s + "'");
    if (!seen.insert(s).second) throw InputError("duplicate state '" + s + "'");
  }
  if (lambda_.state_count() != states_.size()) {
    throw InputError("likelihood is over " + std::to_string(lambda_.state_count()) + " states, model has " +
                     std::to_string(states_.size()));
  }

  std::map<std::string, TruthEntry> sorted;
  for (const auto& [f, e] : truth) {
    if (e.size() != states_.size()) throw InputError("truth event over the wrong number of states");
    sat_set(lang_, f);  // rejects undeclared atoms
    std::string text = lang_.print(f);
    auto [it, inserted] = sorted.try_emplace(text, TruthEntry{f, text, e});
    if (!inserted && it->second.event != e) throw InputError("conflicting truth events for '" + text + "'");
  }
  auto pin = [&](const Formula& f, const Event& e, const char* what) {
    auto [it, inserted] = sorted.try_emplace(lang_.print(f), TruthEntry{f, lang_.print(f), e});
    if (!inserted && it->second.event != e) throw InputError(std::string("t(") + what + ") must be " +
                                                             (f.kind() == Formula::Kind::kTrue ? "all states"
                                                                                               : "empty"));
  };
  pin(Formula::top(), full_event(), "T");
  pin(Formula::bottom(), empty_event(), "F");

  for (auto& [text, entry] : sorted) {
    by_text_.emplace(text, truth_.size());
    truth_.push_back(std::move(entry));
  }
}

std::optional<Event> SubjectiveModel::stored_truth(const Formula& f) const {
  auto it = by_text_.find(lang_.print(f));
  if (it == by_text_.end()) return std::nullopt;
  return truth_[it->second].event;
}

Event SubjectiveModel::truth(const Formula& f) const {
  if (auto stored = stored_truth(f)) return *stored;
  if (extension_ == TruthExtension::kStoredOnly) {
    throw PreconditionError("no stored truth event for '" + lang_.print(f) +
                            "' and this truth valuation does not extend through the connectives");
  }
  switch (f.kind()) {
    case Formula::Kind::kTrue:
      return full_event();
    case Formula::Kind::kFalse:
      return empty_event();
    case Formula::Kind::kAtom:
      throw PreconditionError("no truth event for atom '" + lang_.print(f) + "'");
    case Formula::Kind::kNot:
      return ~truth(f.left());
    case Formula::Kind::kAnd:
      return truth(f.left()) & truth(f.right());
    case Formula::Kind::kOr:
      return truth(f.left()) | truth(f.right());
  }
  return empty_event();
}

std::string SubjectiveModel::event_label(const Event& e) const {
  std::string label;
  for (std::size_t i : e.indices()) {
    if (!label.empty()) label += '|';
    label += states_.at(i);
  }
  return label;
}

Event SubjectiveModel::parse_event(const std::string& label) const {
  Event e = empty_event();
  if (label.empty()) return e;
  std::size_t start = 0;
  while (true) {
    const std::size_t bar = label.find('|', start);
    const std::string name = label.substr(start, bar == std::string::npos ? std::string::npos : bar - start);
    auto it = std::find(states_.begin(), states_.end(), name);
    if (it == states_.end()) throw InputError("unknown state '" + name + "' in event '" + label + "'");
    e.set(static_cast<std::size_t>(it - states_.begin()));
    if (bar == std::string::npos) break;
    start = bar + 1;
  }
  return e;
}

// ---------------------------------------------------------------------------
// Fields

std::vector<Event> field_atoms(std::size_t state_count, const std::vector<Event>& generators) {
  std::vector<Event> atoms;
  std::unordered_map<BitSet, std::size_t> by_signature;
  for (std::size_t w = 0; w < state_count; ++w) {
    BitSet signature(generators.size());
    for (std::size_t g = 0; g < generators.size(); ++g) signature.set(g, generators[g].test(w));
    auto [it, inserted] = by_signature.try_emplace(signature, atoms.size());
    if (inserted) atoms.emplace_back(state_count);
    atoms[it->second].set(w);
  }
  return atoms;
}

Event field_event(const std::vector<Event>& atoms, std::uint64_t mask) {
  Event e(atoms.empty() ? 0 : atoms.front().size());
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    if ((mask >> i) & 1U) e |= atoms[i];
  }
  return e;
}

// ---------------------------------------------------------------------------
// Classification

TruthFlags classify_truth(const SubjectiveModel& m, const std::vector<Formula>& formulas) {
  const Language& lang = m.language();
  struct Item {
    Formula f;
    std::string text;
    ValuationSet sat;
    Event event;
  };
  std::map<std::string, Item> items;
  auto add = [&](const Formula& f) {
    std::string text = lang.print(f);
    if (!items.count(text)) items.emplace(text, Item{f, text, sat_set(lang, f), m.truth(f)});
  };
  if (formulas.empty()) {
    for (const auto& e : m.truth_table()) add(e.formula);
  } else {
    for (const auto& f : formulas) add(f);
  }
  std::vector<const Item*> list;
  for (const auto& [text, item] : items) list.push_back(&item);

  TruthFlags flags;
  auto witness = [&flags](const char* property, std::vector<std::string> names) {
    flags.witnesses.push_back({property, std::move(names)});
  };
  for (std::size_t i = 0; i < list.size(); ++i) {
    for (std::size_t j = 0; j < list.size(); ++j) {
      if (i == j) continue;
      const Item& a = *list[i];
      const Item& b = *list[j];
      if (i < j && a.sat == b.sat && a.event != b.event) {
        if (flags.exact) witness("exact", {a.text, b.text});
        flags.exact = false;
      }
      if (a.sat.is_subset_of(b.sat) && !a.event.is_subset_of(b.event)) {
        if (flags.monotone) witness("monotone", {a.text, b.text});
        flags.monotone = false;
      }
    }
  }
  for (const Item* item : list) {
    const Formula& f = item->f;
    if (f.kind() == Formula::Kind::kNot) {
      auto it = items.find(lang.print(f.left()));
      if (it != items.end() && item->event != ~it->second.event) {
        if (flags.symmetric) witness("symmetric", {item->text, it->first});
        flags.symmetric = false;
      }
    } else if (f.kind() == Formula::Kind::kAnd) {
      auto l = items.find(lang.print(f.left()));
      auto r = items.find(lang.print(f.right()));
      if (l != items.end() && r != items.end() && item->event != (l->second.event & r->second.event)) {
        if (flags.and_distributive) witness("and_distributive", {item->text, l->first, r->first});
        flags.and_distributive = false;
      }
    }
  }
  flags.sound = flags.exact && flags.monotone && flags.symmetric && flags.and_distributive;
  return flags;
}

LikelihoodFlags classify_lambda(const SubjectiveModel& m) {
  std::vector<Event> generators;
  for (const auto& e : m.truth_table()) generators.push_back(e.event);
  const std::vector<Event> atoms = field_atoms(m.state_count(), generators);
  const std::size_t k = atoms.size();
  if (k > 20) throw PreconditionError("the generated field has " + std::to_string(k) + " atoms (at most 20)");

  const std::uint64_t n = std::uint64_t{1} << k;
  std::vector<Rational> value(n);
  for (std::uint64_t mask = 0; mask < n; ++mask) {
    const Event e = field_event(atoms, mask);
    auto v = m.lambda().find(e);
    if (!v) throw PreconditionError("lambda is undefined on field event '" + m.event_label(e) + "'");
    value[mask] = *v;
  }

  LikelihoodFlags flags;
  flags.field_atom_count = k;
  auto label = [&](std::uint64_t mask) { return m.event_label(field_event(atoms, mask)); };
  const std::uint64_t full = n - 1;
  for (std::uint64_t mask = 0; mask < n; ++mask) {
    for (std::size_t a = 0; a < k && flags.monotone; ++a) {
      const std::uint64_t bit = std::uint64_t{1} << a;
      if ((mask & bit) == 0 && value[mask | bit] < value[mask]) {
        flags.monotone = false;
        flags.witnesses.push_back({"monotone", {label(mask), label(mask | bit)}});
      }
    }
    if (flags.symmetric && value[full & ~mask] != 1 - value[mask]) {
      flags.symmetric = false;
      flags.witnesses.push_back({"symmetric", {label(mask), label(full & ~mask)}});
    }
    if (flags.additive) {
      Rational total = 0;
      for (std::size_t a = 0; a < k; ++a) {
        if ((mask >> a) & 1U) total += value[std::uint64_t{1} << a];
      }
      if (total != value[mask]) {
        flags.additive = false;
        flags.witnesses.push_back({"additive", {label(mask)}});
      }
    }
  }
  const std::vector<Rational> masses = mobius(value);
  for (std::uint64_t mask = 1; mask < n; ++mask) {
    if (masses[mask] < 0) {
      flags.totally_monotone = false;
      flags.witnesses.push_back({"totally_monotone", {label(mask)}});
      break;
    }
  }
  return flags;
}

namespace {

std::size_t checked_log2(std::size_t size) {
  std::size_t n = 0;
  while ((std::size_t{1} << n) < size) ++n;
  if ((std::size_t{1} << n) != size || n > 20) {
    throw PreconditionError("set function table must have 2^n entries with n <= 20");
  }
  return n;
}

}  // namespace

std::vector<Rational> mobius(const std::vector<Rational>& by_mask) {
  const std::size_t n = checked_log2(by_mask.size());
  std::vector<Rational> m = by_mask;
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t bit = std::size_t{1} << i;
    for (std::size_t mask = 0; mask < m.size(); ++mask) {
      if (mask & bit) m[mask] -= m[mask ^ bit];
    }
  }
  return m;
}

std::vector<Rational> inverse_mobius(const std::vector<Rational>& masses) {
  const std::size_t n = checked_log2(masses.size());
  std::vector<Rational> f = masses;
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t bit = std::size_t{1} << i;
    for (std::size_t mask = 0; mask < f.size(); ++mask) {
      if (mask & bit) f[mask] += f[mask ^ bit];
    }
  }
  return f;
}

// ---------------------------------------------------------------------------
// Choquet integral

Rational choquet(const std::vector<Rational>& x, const std::function<Rational(const Event&)>& lambda) {
  std::vector<Rational> levels;
  for (const auto& v : x) {
    if (v < 0) throw PreconditionError("choquet requires nonnegative payoffs, got " + to_string(v));
    levels.push_back(v);
  }
  std::sort(levels.begin(), levels.end(), [](const Rational& a, const Rational& b) { return a > b; });
  levels.erase(std::unique(levels.begin(), levels.end()), levels.end());

  Rational total = 0;
  for (std::size_t j = 0; j < levels.size(); ++j) {
    const Rational next = j + 1 < levels.size() ? levels[j + 1] : Rational(0);
    const Rational coefficient = levels[j] - next;
    if (coefficient == 0) continue;
    Event upper(x.size());
    for (std::size_t w = 0; w < x.size(); ++w) {
      if (x[w] >= levels[j]) upper.set(w);
    }
    total += coefficient * lambda(upper);
  }
  return total;
}

Rational choquet(const std::vector<Rational>& x, const Likelihood& lambda) {
  if (x.size() != lambda.state_count()) throw PreconditionError("payoff vector and likelihood differ in state count");
  return choquet(x, [&lambda](const Event& e) {
    auto v = lambda.find(e);
    if (!v) throw PreconditionError("upper level set outside the domain of the likelihood");
    return *v;
  });
}

Rational choquet_signed(const std::vector<Rational>& x, const Likelihood& lambda) {
  if (x.empty()) return 0;
  const Rational shift = *std::min_element(x.begin(), x.end());
  if (shift >= 0) return choquet(x, lambda);
  std::vector<Rational> shifted;
  for (const auto& v : x) shifted.push_back(v - shift);
  return choquet(shifted, lambda) + shift;
}

// ---------------------------------------------------------------------------
// Representation

RepresentationCheck represents(const SubjectiveModel& m, const Assessment& a) {
  if (m.language() != a.language()) throw InputError("model and assessment declare different atoms");
  RepresentationCheck out;
  for (const auto& entry : a.entries()) {
    Residual r{entry.text, entry.value, std::nullopt, {}};
    try {
      const Event e = m.truth(entry.formula);
      r.lambda = m.lambda().find(e);
      if (!r.lambda) r.note = "lambda undefined on t(phi) = {" + m.event_label(e) + "}";
    } catch (const PreconditionError& err) {
      r.note = err.what();
    }
    if (!r.lambda || *r.lambda != r.pi) out.represents = false;
    out.residuals.push_back(std::move(r));
  }
  return out;
}

}  // namespace contingent
