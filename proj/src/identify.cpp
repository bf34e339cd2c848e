#include "contingent/identify.hpp"

#include "contingent/error.hpp"

namespace contingent {

namespace {

void require_same_language(const Assessment& a, const Theory& t) {
  if (a.language() != t.language()) throw InputError("theory and assessment declare different atoms");
}

// S-I relative to the theory with valuation set v.
bool passes_relative_to(const Assessment& a, const ValuationSet& v) {
  const auto& e = a.entries();
  for (std::size_t i = 0; i < e.size(); ++i) {
    const ValuationSet restricted = e[i].sat & v;
    for (std::size_t j = 0; j < e.size(); ++j) {
      if (e[j].value < e[i].value && restricted.is_subset_of(e[j].sat)) return false;
    }
  }
  return true;
}

}  // namespace

std::vector<ImplicationVerdict> understood_implications(const Assessment& a) {
  const AxiomReport nt = check_nt(a);
  if (!nt.pass) throw PreconditionError("identification needs NT; violated at " + describe(nt.violations.front()));
  std::vector<ImplicationVerdict> out;
  const auto& e = a.entries();
  for (std::size_t i = 0; i < e.size(); ++i) {
    for (std::size_t j = 0; j < e.size(); ++j) {
      if (i == j || !e[i].sat.is_subset_of(e[j].sat)) continue;
      const Rational margin = e[j].value - e[i].value;
      out.push_back({e[i].text, e[j].text, true, margin >= 0, margin});
    }
  }
  return out;
}

SubtheoryResult largest_subtheory(const Assessment& a, const Theory& t, std::size_t max_free_valuations) {
  require_same_language(a, t);
  const AxiomReport i_report = check_i(a);
  if (!i_report.pass) {
    throw PreconditionError("largest sub-theory needs " + axiom_title(Axiom::kI) + "; violated at " +
                            describe(i_report.violations.front()));
  }
  const Language& lang = a.language();
  const std::vector<std::size_t> free = (~t.valuations()).indices();
  if (free.size() > max_free_valuations) {
    throw PreconditionError("the theory leaves " + std::to_string(free.size()) +
                            " valuations outside V(T); enumeration is limited to " +
                            std::to_string(max_free_valuations));
  }

  const std::uint64_t count = std::uint64_t{1} << free.size();
  auto expand = [&](std::uint64_t mask) {
    ValuationSet v = t.valuations();
    for (std::size_t k = 0; k < free.size(); ++k) {
      if ((mask >> k) & 1U) v.set(free[k]);
    }
    return v;
  };
  std::vector<bool> passes(count);
  for (std::uint64_t mask = 0; mask < count; ++mask) passes[mask] = passes_relative_to(a, expand(mask));

  SubtheoryResult out{Theory::tautologies(lang), true, {}, true, {}};
  std::uint64_t union_mask = 0;
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    if (!passes[mask]) continue;
    bool minimal = true;
    for (std::size_t k = 0; k < free.size() && minimal; ++k) {
      const std::uint64_t bit = std::uint64_t{1} << k;
      if ((mask & bit) && passes[mask & ~bit]) minimal = false;
    }
    if (minimal) {
      out.candidates.push_back(expand(mask));
      union_mask |= mask;
    }
  }
  // The full valuation set always passes under I, so candidates is nonempty.
  out.unique = out.candidates.size() == 1;
  out.theory = Theory::from_valuations(lang, expand(union_mask), t.generators(), t.labels());
  if (!out.unique) {
    out.diagnostics.push_back(std::to_string(out.candidates.size()) +
                              " incomparable maximal sub-theories pass; reporting their common part");
  }
  out.verified = check_s_i(a, out.theory).pass;
  return out;
}

SubtheoryResult subtheory_via_certainty(const Assessment& a, const Theory& t, std::size_t ie_family_size) {
  require_same_language(a, t);
  const AxiomReport ie = check_ie(a, ie_family_size);
  if (!ie.pass) {
    throw PreconditionError("sub-theory via certainty needs " + axiom_title(Axiom::kIE) + "; violated at " +
                            describe(ie.violations.front()));
  }
  std::vector<Formula> generators;
  std::vector<std::string> labels;
  for (const auto& e : a.entries()) {
    if (e.value == 1 && !e.sat.all() && t.valuations().is_subset_of(e.sat)) {
      generators.push_back(e.formula);
      // Prefer the theory's own spelling of an identical generator.
      std::string label = e.text;
      for (std::size_t g = 0; g < t.generators().size(); ++g) {
        if (t.generators()[g] == e.formula && g < t.labels().size()) label = t.labels()[g];
      }
      labels.push_back(label);
    }
  }
  SubtheoryResult out{Theory(a.language(), generators, labels), true, {}, true, {}};
  out.candidates.push_back(out.theory.valuations());
  const AxiomReport si = check_s_i(a, out.theory);
  out.verified = si.pass;
  if (!si.pass) {
    out.diagnostics.push_back("certainty sub-theory fails theory-relative implication at " +
                              describe(si.violations.front()));
  }
  if (!ie.untestable.empty()) {
    out.diagnostics.push_back(std::to_string(ie.untestable.size()) + " IE families untestable on this universe");
  }
  return out;
}

}  // namespace contingent
