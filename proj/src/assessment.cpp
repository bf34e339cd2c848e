#include "contingent/assessment.hpp"

#include <algorithm>
#include <map>

#include "contingent/error.hpp"

namespace contingent {

Assessment::Assessment(Language lang, const std::vector<std::pair<Formula, Rational>>& values)
    : lang_(std::move(lang)) {
  std::map<std::string, AssessmentEntry> sorted;
  for (const auto& [f, v] : values) {
    std::string text = lang_.print(f);
    AssessmentEntry entry{f, text, sat_set(lang_, f), v};
    if (!sorted.emplace(text, std::move(entry)).second) {
      throw InputError("formula '" + text + "' assessed twice");
    }
  }
  sorted.try_emplace("T", AssessmentEntry{Formula::top(), "T", lang_.full_set(), Rational(1)});
  sorted.try_emplace("F", AssessmentEntry{Formula::bottom(), "F", lang_.empty_set(), Rational(0)});
  for (auto& [text, entry] : sorted) {
    by_text_.emplace(text, entries_.size());
    by_sat_[entry.sat].push_back(entries_.size());
    entries_.push_back(std::move(entry));
  }
}

std::optional<std::size_t> Assessment::index_of(const Formula& f) const {
  auto it = by_text_.find(lang_.print(f));
  if (it == by_text_.end()) return std::nullopt;
  return it->second;
}

const AssessmentEntry* Assessment::find(const Formula& f) const {
  auto i = index_of(f);
  return i ? &entries_[*i] : nullptr;
}

const Rational& Assessment::value(const Formula& f) const {
  const auto* e = find(f);
  if (e == nullptr) throw InputError("formula '" + lang_.print(f) + "' is not in the assessed universe");
  return e->value;
}

const std::vector<std::size_t>& Assessment::members_with_sat(const ValuationSet& s) const {
  static const std::vector<std::size_t> kNone;
  auto it = by_sat_.find(s);
  return it == by_sat_.end() ? kNone : it->second;
}

// ---------------------------------------------------------------------------
// Bets

Bet::Bet(std::vector<std::pair<Formula, Rational>> weights) : weights_(std::move(weights)) {
  Rational total = 0;
  for (const auto& [f, w] : weights_) {
    if (w <= 0) throw InputError("bet weights must be positive");
    total += w;
  }
  if (total != 1) throw InputError("bet weights sum to " + to_string(total) + ", not 1");
}

Bet Bet::primitive(Formula f) { return Bet({{std::move(f), Rational(1)}}); }

Bet Bet::mixture(const Rational& alpha, const Bet& a, const Bet& b) {
  if (alpha < 0 || alpha > 1) throw InputError("mixture weight outside [0, 1]");
  std::vector<std::pair<Formula, Rational>> out;
  auto add = [&out](const Formula& f, const Rational& w) {
    if (w == 0) return;
    for (auto& [g, v] : out) {
      if (g == f) {
        v += w;
        return;
      }
    }
    out.emplace_back(f, w);
  };
  for (const auto& [f, w] : a.weights()) add(f, alpha * w);
  for (const auto& [f, w] : b.weights()) add(f, (1 - alpha) * w);
  return Bet(std::move(out));
}

Rational bet_value(const Assessment& a, const Bet& b) {
  Rational v = 0;
  for (const auto& [f, w] : b.weights()) v += w * a.value(f);
  return v;
}

// ---------------------------------------------------------------------------
// Axioms

std::string axiom_id(Axiom axiom) {
  switch (axiom) {
    case Axiom::kNT:
      return "nt";
    case Axiom::kE:
      return "e";
    case Axiom::kI:
      return "i";
    case Axiom::kIE:
      return "ie";
    case Axiom::kA:
      return "a";
    case Axiom::kSI:
      return "s-i";
  }
  return {};
}

std::string axiom_title(Axiom axiom) {
  switch (axiom) {
    case Axiom::kNT:
      return "Axiom NT (Non-Triviality): b_T >= b_phi >= b_F and b_T > b_F";
    case Axiom::kE:
      return "Axiom E (Equivalence): if psi <=> phi then b_psi ~ b_phi";
    case Axiom::kI:
      return "Axiom I (Implication): if phi => psi then b_psi >= b_phi";
    case Axiom::kIE:
      return "Axiom IE (Inclusion/Exclusion): phi_i => psi for all i implies "
             "pi(psi) + sum_even pi(phi_I) >= sum_odd pi(phi_I)";
    case Axiom::kA:
      return "Axiom A (Additivity): if phi & phi' => F then {1/2 b_phi, 1/2 b_phi'} ~ "
             "{1/2 b_(phi | phi'), 1/2 b_F}";
    case Axiom::kSI:
      return "Axiom T-I (theory implication): if phi =>_T psi then b_psi >= b_phi";
  }
  return {};
}

std::optional<Axiom> parse_axiom_id(const std::string& id) {
  for (Axiom a : {Axiom::kNT, Axiom::kE, Axiom::kI, Axiom::kIE, Axiom::kA, Axiom::kSI}) {
    if (axiom_id(a) == id) return a;
  }
  return std::nullopt;
}

std::string describe(const Violation& v) {
  std::string out;
  for (const auto& f : v.formulas) out += (out.empty() ? "" : ", ") + f;
  return out + ": lhs " + to_string(v.lhs) + ", rhs " + to_string(v.rhs) + " violates " + v.inequality;
}

namespace {

AxiomReport finish(AxiomReport r) {
  r.pass = r.violations.empty();
  return r;
}

// Shared by I and T-I: `entails(i, j)` decides whether member i entails j.
template <typename Entails>
AxiomReport check_monotone(const Assessment& a, Axiom axiom, Entails entails) {
  AxiomReport r;
  r.axiom = axiom;
  const auto& e = a.entries();
  for (std::size_t i = 0; i < e.size(); ++i) {
    for (std::size_t j = 0; j < e.size(); ++j) {
      if (i == j || !entails(i, j)) continue;
      ++r.tested;
      if (e[j].value < e[i].value) {
        r.violations.push_back(
            {{e[i].text, e[j].text}, e[j].value, e[i].value, "pi(psi) >= pi(phi) with phi => psi"});
      }
    }
  }
  return finish(std::move(r));
}

}  // namespace

AxiomReport check_nt(const Assessment& a) {
  AxiomReport r;
  r.axiom = Axiom::kNT;
  for (const auto& e : a.entries()) {
    ++r.tested;
    if (e.formula.kind() == Formula::Kind::kTrue && e.value != 1) {
      r.violations.push_back({{e.text}, e.value, Rational(1), "pi(T) = 1"});
    } else if (e.formula.kind() == Formula::Kind::kFalse && e.value != 0) {
      r.violations.push_back({{e.text}, e.value, Rational(0), "pi(F) = 0"});
    } else if (e.value < 0) {
      r.violations.push_back({{e.text}, e.value, Rational(0), "pi(phi) >= 0"});
    } else if (e.value > 1) {
      r.violations.push_back({{e.text}, e.value, Rational(1), "pi(phi) <= 1"});
    }
  }
  return finish(std::move(r));
}

AxiomReport check_e(const Assessment& a) {
  AxiomReport r;
  r.axiom = Axiom::kE;
  const auto& e = a.entries();
  for (std::size_t i = 0; i < e.size(); ++i) {
    for (std::size_t j = i + 1; j < e.size(); ++j) {
      if (e[i].sat != e[j].sat) continue;
      ++r.tested;
      if (e[i].value != e[j].value) {
        r.violations.push_back({{e[i].text, e[j].text}, e[i].value, e[j].value, "pi(phi) = pi(psi)"});
      }
    }
  }
  return finish(std::move(r));
}

AxiomReport check_i(const Assessment& a) {
  const auto& e = a.entries();
  return check_monotone(a, Axiom::kI, [&e](std::size_t i, std::size_t j) { return e[i].sat.is_subset_of(e[j].sat); });
}

AxiomReport check_s_i(const Assessment& a, const Theory& theory) {
  if (theory.language() != a.language()) throw InputError("theory and assessment declare different atoms");
  const auto& e = a.entries();
  const ValuationSet& v = theory.valuations();
  AxiomReport r = check_monotone(a, Axiom::kSI, [&e, &v](std::size_t i, std::size_t j) {
    return (e[i].sat & v).is_subset_of(e[j].sat);
  });
  return r;
}

AxiomReport check_ie(const Assessment& a, std::size_t n_max) {
  AxiomReport r;
  r.axiom = Axiom::kIE;
  const auto& e = a.entries();
  if (n_max == 0) return finish(std::move(r));

  for (std::size_t psi = 0; psi < e.size(); ++psi) {
    std::vector<std::size_t> below;
    for (std::size_t j = 0; j < e.size(); ++j) {
      if (e[j].sat.is_subset_of(e[psi].sat)) below.push_back(j);
    }
    const std::size_t k_max = std::min(n_max, below.size());
    for (std::size_t k = 1; k <= k_max; ++k) {
      // Enumerate strictly increasing k-tuples of positions into `below`.
      std::vector<std::size_t> pos(k);
      for (std::size_t t = 0; t < k; ++t) pos[t] = t;
      while (true) {
        std::vector<std::size_t> family(k);
        for (std::size_t t = 0; t < k; ++t) family[t] = below[pos[t]];

        Rational even = 0;
        Rational odd = 0;
        std::optional<std::string> missing;
        for (std::uint32_t subset = 1; subset < (1U << k) && !missing; ++subset) {
          ValuationSet meet = a.language().full_set();
          std::size_t size = 0;
          std::size_t only = 0;
          for (std::size_t t = 0; t < k; ++t) {
            if ((subset >> t) & 1U) {
              meet &= e[family[t]].sat;
              ++size;
              only = family[t];
            }
          }
          const Rational* value = nullptr;
          if (size == 1) {
            value = &e[only].value;
          } else {
            const auto& members = a.members_with_sat(meet);
            if (members.empty()) {
              std::string conj;
              for (std::size_t t = 0; t < k; ++t) {
                if ((subset >> t) & 1U) conj += (conj.empty() ? "" : " & ") + e[family[t]].text;
              }
              missing = conj;
              break;
            }
            value = &e[members.front()].value;
          }
          (size % 2 == 0 ? even : odd) += *value;
        }

        std::vector<std::string> names{e[psi].text};
        for (auto f : family) names.push_back(e[f].text);
        if (missing) {
          r.untestable.push_back({std::move(names), "no member equivalent to " + *missing});
        } else {
          ++r.tested;
          const Rational lhs = e[psi].value + even;
          if (lhs < odd) {
            r.violations.push_back(
                {std::move(names), lhs, odd, "pi(psi) + sum_even pi(phi_I) >= sum_odd pi(phi_I)"});
          }
        }

        // Advance to the next combination.
        std::size_t t = k;
        while (t > 0 && pos[t - 1] == below.size() - k + (t - 1)) --t;
        if (t == 0) break;
        ++pos[t - 1];
        for (std::size_t u = t; u < k; ++u) pos[u] = pos[u - 1] + 1;
      }
    }
  }
  return finish(std::move(r));
}

AxiomReport check_a(const Assessment& a) {
  AxiomReport r;
  r.axiom = Axiom::kA;
  const auto& e = a.entries();
  for (std::size_t i = 0; i < e.size(); ++i) {
    for (std::size_t j = i; j < e.size(); ++j) {
      if (e[i].sat.intersects(e[j].sat)) continue;
      const auto& members = a.members_with_sat(e[i].sat | e[j].sat);
      if (members.empty()) {
        r.untestable.push_back({{e[i].text, e[j].text}, "disjunction not in universe"});
        continue;
      }
      const Rational lhs = e[i].value + e[j].value;
      for (std::size_t m : members) {
        ++r.tested;
        if (lhs != e[m].value) {
          r.violations.push_back(
              {{e[i].text, e[j].text, e[m].text}, lhs, e[m].value, "pi(phi) + pi(phi') = pi(phi | phi')"});
        }
      }
    }
  }
  return finish(std::move(r));
}

}  // namespace contingent
