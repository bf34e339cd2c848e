#include "contingent/report.hpp"

#include <sstream>

namespace contingent {

namespace {

Json rationals(const std::vector<Rational>& values) {
  Json out = Json::array();
  for (const auto& v : values) out.push_back(rational_to_json(v));
  return out;
}

Json event_labels(const Event& e, const std::vector<std::string>& states) {
  Json out = Json::array();
  for (std::size_t i : e.indices()) out.push_back(states[i]);
  return out;
}

Json theory_generators(const Theory& t) {
  Json out = Json::array();
  for (std::size_t i = 0; i < t.generators().size(); ++i) {
    out.push_back(i < t.labels().size() ? t.labels()[i] : t.language().print(t.generators()[i]));
  }
  return out;
}

}  // namespace

Json axiom_report_json(const AxiomReport& r) {
  Json j;
  j["axiom"] = axiom_id(r.axiom);
  j["title"] = axiom_title(r.axiom);
  j["pass"] = r.pass;
  j["tested"] = r.tested;
  Json violations = Json::array();
  for (const auto& v : r.violations) {
    Json item;
    item["formulas"] = v.formulas;
    item["lhs"] = rational_to_json(v.lhs);
    item["rhs"] = rational_to_json(v.rhs);
    item["inequality"] = v.inequality;
    item["cites"] = axiom_title(r.axiom);
    violations.push_back(std::move(item));
  }
  j["violations"] = std::move(violations);
  Json untestable = Json::array();
  for (const auto& u : r.untestable) {
    Json item;
    item["formulas"] = u.formulas;
    item["reason"] = u.reason;
    untestable.push_back(std::move(item));
  }
  j["untestable"] = std::move(untestable);
  return j;
}

Json check_report_json(const std::vector<AxiomReport>& reports) {
  Json j;
  j["command"] = "check";
  bool pass = true;
  Json list = Json::array();
  for (const auto& r : reports) {
    pass = pass && r.pass;
    list.push_back(axiom_report_json(r));
  }
  j["pass"] = pass;
  j["axioms"] = std::move(list);
  return j;
}

Json build_report_json(const BuildOutcome& outcome) {
  Json j;
  j["command"] = "build";
  j["construction"] = construction_id(outcome.construction);
  j["canonical"] = outcome.canonical;
  j["certificate"] = outcome.certificate;
  j["model"] = model_to_json(outcome.model);
  return j;
}

Json identify_report_json(const std::vector<ImplicationVerdict>& verdicts, const SubtheoryResult* subtheory,
                          const std::string& method) {
  Json j;
  j["command"] = "identify";
  Json list = Json::array();
  std::size_t not_understood = 0;
  for (const auto& v : verdicts) {
    Json item;
    item["antecedent"] = v.antecedent;
    item["consequent"] = v.consequent;
    item["understood"] = v.understood;
    item["margin"] = rational_to_json(v.margin);
    if (!v.understood) ++not_understood;
    list.push_back(std::move(item));
  }
  j["implications"] = std::move(list);
  j["not_understood"] = not_understood;
  if (subtheory != nullptr) {
    Json s;
    s["method"] = method;
    s["generators"] = theory_generators(subtheory->theory);
    s["unique"] = subtheory->unique;
    s["verified"] = subtheory->verified;
    Json candidates = Json::array();
    for (const auto& c : subtheory->candidates) {
      Json labels = Json::array();
      for (std::size_t v : c.indices()) labels.push_back(subtheory->theory.language().valuation_label(v));
      candidates.push_back(std::move(labels));
    }
    s["candidate_valuation_sets"] = std::move(candidates);
    s["diagnostics"] = subtheory->diagnostics;
    j["subtheory"] = std::move(s);
  }
  return j;
}

Json rationalize_report_json(const SubjectiveModel& base, const std::vector<Strategy>& strategies,
                             std::size_t chosen, const RationalizabilityResult& result) {
  Json j;
  j["command"] = "rationalize";
  j["chosen"] = strategies[chosen].name();
  j["method"] = result.method;
  j["rationalizable"] = result.rationalizable;

  Json vectors = Json::object();
  for (std::size_t i = 0; i < strategies.size(); ++i) vectors[strategies[i].name()] = rationals(result.base_vectors[i]);
  j["base_vectors"] = std::move(vectors);

  if (result.maximal) {
    Json mm;
    Json coords = Json::array();
    for (const auto& c : result.maximal->coordinates()) coords.push_back(event_labels(c, base.states()));
    mm["coordinates"] = std::move(coords);
    mm["state_count"] = result.maximal->state_count();
    Json tested = Json::object();
    for (std::size_t i = 0; i < strategies.size(); ++i) {
      tested[strategies[i].name()] = rationals(result.tested_vectors[i]);
    }
    mm["vectors"] = std::move(tested);
    j["maximal_model"] = std::move(mm);
  }

  Json d;
  d["dominated"] = result.dominance.dominated;
  d["epsilon"] = rational_to_json(result.dominance.epsilon);
  Json mixture = Json::object();
  for (std::size_t i = 0; i < result.dominance.mixture.size(); ++i) {
    mixture[strategies[i].name()] = rational_to_json(result.dominance.mixture[i]);
  }
  d["mixture"] = std::move(mixture);
  if (!result.dominance.prior.empty()) d["prior"] = rationals(result.dominance.prior);
  j["dominance"] = std::move(d);

  if (result.lp_witness) {
    Json w = likelihood_to_json(*result.lp_witness, base);
    Json values = Json::object();
    for (std::size_t i = 0; i < strategies.size(); ++i) values[strategies[i].name()] = rational_to_json(result.lp_values[i]);
    w["choquet_values"] = std::move(values);
    w["verified"] = result.lp_witness_verified;
    j["witness"] = std::move(w);
  }
  if (result.candidate_given) {
    Json c;
    c["verified"] = result.candidate_verified;
    if (!result.candidate_values.empty()) {
      Json values = Json::object();
      for (std::size_t i = 0; i < strategies.size(); ++i) {
        values[strategies[i].name()] = rational_to_json(result.candidate_values[i]);
      }
      c["choquet_values"] = std::move(values);
    } else {
      c["note"] = "candidate likelihood misses an upper level set";
    }
    j["candidate"] = std::move(c);
  }
  return j;
}

namespace {

bool is_scalar(const Json& j) { return !j.is_object() && !j.is_array(); }

std::string scalar_text(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  return j.dump();
}

bool is_flat_list(const Json& j) {
  if (!j.is_array()) return false;
  for (const auto& item : j) {
    if (!is_scalar(item)) return false;
  }
  return true;
}

std::string flat_list(const Json& j) {
  std::string out = "[";
  for (std::size_t i = 0; i < j.size(); ++i) out += (i ? ", " : "") + scalar_text(j[i]);
  return out + "]";
}

void render(const Json& j, int indent, std::ostringstream& out) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) {
      if (is_scalar(value)) {
        out << pad << key << ": " << scalar_text(value) << '\n';
      } else if (is_flat_list(value)) {
        out << pad << key << ": " << flat_list(value) << '\n';
      } else if (value.empty()) {
        out << pad << key << ": (none)\n";
      } else {
        out << pad << key << ":\n";
        render(value, indent + 2, out);
      }
    }
  } else if (j.is_array()) {
    for (const auto& item : j) {
      if (is_scalar(item)) {
        out << pad << "- " << scalar_text(item) << '\n';
      } else if (is_flat_list(item)) {
        out << pad << "- " << flat_list(item) << '\n';
      } else {
        out << pad << "-\n";
        render(item, indent + 2, out);
      }
    }
  } else {
    out << pad << scalar_text(j) << '\n';
  }
}

}  // namespace

std::string render_text(const Json& report) {
  std::ostringstream out;
  render(report, 0, out);
  return out.str();
}

}  // namespace contingent
