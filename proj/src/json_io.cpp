#include "contingent/json_io.hpp"

#include <fstream>
#include <map>
#include <set>

#include "contingent/error.hpp"

namespace contingent {

namespace {

const Json& require_key(const Json& j, const char* key, const std::string& what) {
  if (!j.is_object() || !j.contains(key)) throw InputError(what + ": missing key '" + key + "'");
  return j.at(key);
}

const Json& require_object(const Json& j, const std::string& what) {
  if (!j.is_object()) throw InputError(what + " must be an object");
  return j;
}

std::string require_string(const Json& j, const std::string& what) {
  if (!j.is_string()) throw InputError(what + " must be a string");
  return j.get<std::string>();
}

Formula parse_formula(const Language& lang, const std::string& text, const std::string& where) {
  try {
    return lang.parse(text);
  } catch (const ParseError& e) {
    throw ParseError(where + ": '" + text + "': " + e.what(), e.position());
  }
}

}  // namespace

Rational rational_from_json(const Json& j, const std::string& where) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const InputError& e) {
      throw InputError(where + ": " + e.what());
    }
  }
  throw InputError(where + ": expected a rational as \"num/den\"");
}

Json rational_to_json(const Rational& r) { return to_string(r); }

Language language_from_json(const Json& j, const std::optional<Language>& fallback) {
  if (j.is_object() && j.contains("atoms")) {
    const Json& atoms = j.at("atoms");
    if (!atoms.is_array()) throw InputError("'atoms' must be a list of names");
    std::vector<std::string> names;
    for (const auto& a : atoms) names.push_back(require_string(a, "atom name"));
    Language lang(std::move(names));
    if (fallback && *fallback != lang) throw InputError("atom declarations differ between files");
    return lang;
  }
  if (fallback) return *fallback;
  throw InputError("no atoms declared");
}

Assessment assessment_from_json(const Json& j, const std::optional<Language>& lang_hint) {
  const Language lang = language_from_json(require_object(j, "assessment"), lang_hint);
  const Json& pi = require_object(require_key(j, "pi", "assessment"), "'pi'");
  std::vector<std::pair<Formula, Rational>> values;
  for (const auto& [text, value] : pi.items()) {
    values.emplace_back(parse_formula(lang, text, "pi"), rational_from_json(value, "pi['" + text + "']"));
  }
  return Assessment(lang, values);
}

Json assessment_to_json(const Assessment& a) {
  Json j;
  j["atoms"] = a.language().atoms();
  Json pi = Json::object();
  for (const auto& e : a.entries()) pi[e.text] = rational_to_json(e.value);
  j["pi"] = std::move(pi);
  return j;
}

Theory theory_from_json(const Json& j, const std::optional<Language>& lang_hint) {
  const Language lang = language_from_json(require_object(j, "theory"), lang_hint);
  const Json& gens = require_key(j, "generators", "theory");
  if (!gens.is_array()) throw InputError("'generators' must be a list of formulas");
  std::vector<Formula> formulas;
  std::vector<std::string> labels;
  for (const auto& g : gens) {
    const std::string text = require_string(g, "generator");
    formulas.push_back(parse_formula(lang, text, "generators"));
    labels.push_back(text);
  }
  if (!theory_consistent(lang, formulas)) throw InputError("theory generators are jointly unsatisfiable");
  return Theory(lang, formulas, labels);
}

Json theory_to_json(const Theory& t) {
  Json j;
  j["atoms"] = t.language().atoms();
  Json gens = Json::array();
  for (std::size_t i = 0; i < t.generators().size(); ++i) {
    gens.push_back(i < t.labels().size() ? t.labels()[i] : t.language().print(t.generators()[i]));
  }
  j["generators"] = std::move(gens);
  return j;
}

namespace {

Event event_from_labels(const Json& j, const std::vector<std::string>& states, const std::string& where) {
  if (!j.is_array()) throw InputError(where + " must be a list of state labels");
  Event e(states.size());
  for (const auto& label : j) {
    const std::string s = require_string(label, where);
    auto it = std::find(states.begin(), states.end(), s);
    if (it == states.end()) throw InputError(where + ": unknown state '" + s + "'");
    e.set(static_cast<std::size_t>(it - states.begin()));
  }
  return e;
}

Json labels_of(const Event& e, const std::vector<std::string>& states) {
  Json out = Json::array();
  for (std::size_t i : e.indices()) out.push_back(states[i]);
  return out;
}

Likelihood likelihood_over(const Json& j, const std::vector<std::string>& states, const SubjectiveModel* m,
                           const std::string& where) {
  const std::size_t n = states.size();
  if (j.contains("masses")) {
    const Json& masses = require_object(j.at("masses"), where + " 'masses'");
    std::vector<Rational> point(n, Rational(0));
    for (const auto& [label, value] : masses.items()) {
      auto it = std::find(states.begin(), states.end(), label);
      if (it == states.end()) throw InputError(where + ": mass on unknown state '" + label + "'");
      point[static_cast<std::size_t>(it - states.begin())] = rational_from_json(value, "masses['" + label + "']");
    }
    try {
      return Likelihood::additive(std::move(point));
    } catch (const PreconditionError& e) {
      throw InputError(where + ": " + e.what());
    }
  }
  if (j.contains("lambda")) {
    const Json& table = require_object(j.at("lambda"), where + " 'lambda'");
    std::map<Event, Rational> values;
    for (const auto& [label, value] : table.items()) {
      Event e(n);
      if (m != nullptr) {
        e = m->parse_event(label);
      } else if (!label.empty()) {
        std::size_t start = 0;
        while (true) {
          const std::size_t bar = label.find('|', start);
          const std::string name = label.substr(start, bar == std::string::npos ? std::string::npos : bar - start);
          auto it = std::find(states.begin(), states.end(), name);
          if (it == states.end()) throw InputError(where + ": unknown state '" + name + "' in event '" + label + "'");
          e.set(static_cast<std::size_t>(it - states.begin()));
          if (bar == std::string::npos) break;
          start = bar + 1;
        }
      }
      const Rational v = rational_from_json(value, "lambda['" + label + "']");
      auto [it, inserted] = values.emplace(e, v);
      if (!inserted && it->second != v) throw InputError(where + ": event '" + label + "' listed twice");
    }
    try {
      return Likelihood::table(n, std::move(values));
    } catch (const PreconditionError& e) {
      throw InputError(where + ": " + e.what());
    }
  }
  return Likelihood::unspecified(n);
}

}  // namespace

SubjectiveModel model_from_json(const Json& j, const std::optional<Language>& lang_hint) {
  const Language lang = language_from_json(require_object(j, "model"), lang_hint);
  const Json& states_json = require_key(j, "states", "model");
  if (!states_json.is_array()) throw InputError("'states' must be a list of labels");
  std::vector<std::string> states;
  for (const auto& s : states_json) states.push_back(require_string(s, "state label"));

  std::vector<std::pair<Formula, Event>> truth;
  if (j.contains("t")) {
    for (const auto& [text, labels] : require_object(j.at("t"), "'t'").items()) {
      truth.emplace_back(parse_formula(lang, text, "t"), event_from_labels(labels, states, "t['" + text + "']"));
    }
  }
  Likelihood lambda = likelihood_over(j, states, nullptr, "model");
  TruthExtension extension = TruthExtension::kHomomorphic;
  if (j.contains("truth_extension")) {
    const std::string mode = require_string(j.at("truth_extension"), "'truth_extension'");
    if (mode == "stored-only") {
      extension = TruthExtension::kStoredOnly;
    } else if (mode != "homomorphic") {
      throw InputError("'truth_extension' must be \"homomorphic\" or \"stored-only\"");
    }
  }
  try {
    return SubjectiveModel(lang, std::move(states), truth, std::move(lambda), extension);
  } catch (const PreconditionError& e) {
    throw InputError(std::string("model: ") + e.what());
  }
}

Likelihood likelihood_from_json(const Json& j, const SubjectiveModel& m) {
  require_object(j, "likelihood");
  if (j.contains("lambda") || j.contains("masses")) return likelihood_over(j, m.states(), &m, "likelihood");
  Json wrapped;
  wrapped["lambda"] = j;
  return likelihood_over(wrapped, m.states(), &m, "likelihood");
}

Json likelihood_to_json(const Likelihood& l, const SubjectiveModel& m) {
  Json out = Json::object();
  if (l.is_additive_form()) {
    Json masses = Json::object();
    for (std::size_t i = 0; i < l.masses().size(); ++i) masses[m.states()[i]] = rational_to_json(l.masses()[i]);
    out["masses"] = std::move(masses);
    return out;
  }
  // Events ordered by size, then by state order, for stable output.
  std::vector<std::pair<Event, Rational>> entries(l.values().begin(), l.values().end());
  std::stable_sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) {
    const auto ia = a.first.indices();
    const auto ib = b.first.indices();
    if (ia.size() != ib.size()) return ia.size() < ib.size();
    return ia < ib;
  });
  Json table = Json::object();
  for (const auto& [e, v] : entries) table[m.event_label(e)] = rational_to_json(v);
  out["lambda"] = std::move(table);
  return out;
}

Json model_to_json(const SubjectiveModel& m) {
  Json j;
  j["atoms"] = m.language().atoms();
  j["states"] = m.states();
  Json t = Json::object();
  for (const auto& e : m.truth_table()) t[e.text] = labels_of(e.event, m.states());
  j["t"] = std::move(t);
  if (m.extension() == TruthExtension::kStoredOnly) j["truth_extension"] = "stored-only";
  const Json lambda = likelihood_to_json(m.lambda(), m);
  for (const auto& [key, value] : lambda.items()) j[key] = value;
  return j;
}

Strategy strategy_from_json(const Json& j, const Language& lang, const std::string& default_name) {
  require_object(j, "strategy");
  const std::string name = j.contains("name") ? require_string(j.at("name"), "strategy name") : default_name;
  const Json& payoffs = require_object(require_key(j, "payoffs", "strategy '" + name + "'"), "'payoffs'");
  std::vector<std::pair<Formula, Rational>> entries;
  for (const auto& [text, value] : payoffs.items()) {
    entries.emplace_back(parse_formula(lang, text, "payoffs"), rational_from_json(value, "payoffs['" + text + "']"));
  }
  return Strategy(name, std::move(entries));
}

StrategySet strategies_from_json(const Json& j, const Language& lang) {
  require_object(j, "strategies file");
  StrategySet out;
  if (j.contains("payoffs")) {
    out.strategies.push_back(strategy_from_json(j, lang, "s1"));
    return out;
  }
  const Json& list = require_key(j, "strategies", "strategies file");
  if (!list.is_array() || list.empty()) throw InputError("'strategies' must be a nonempty list");
  std::set<std::string> names;
  for (std::size_t i = 0; i < list.size(); ++i) {
    out.strategies.push_back(strategy_from_json(list[i], lang, "s" + std::to_string(i + 1)));
    if (!names.insert(out.strategies.back().name()).second) {
      throw InputError("duplicate strategy name '" + out.strategies.back().name() + "'");
    }
  }
  if (j.contains("chosen")) out.chosen = require_string(j.at("chosen"), "'chosen'");
  if (j.contains("candidate")) out.candidate = j.at("candidate");
  return out;
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path.string() + "'");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError("'" + path.string() + "' is not valid JSON: " + e.what());
  }
}

Session session_from_json(const Json& j, const std::filesystem::path& base_dir) {
  require_object(j, "session");
  Session s;
  auto path_of = [&](const Json& v, const std::string& what) {
    return base_dir / require_string(v, what);
  };
  if (j.contains("atoms")) s.language = language_from_json(j);
  if (j.contains("assessment")) s.assessment = path_of(j.at("assessment"), "'assessment'");
  if (j.contains("theory")) s.theory = path_of(j.at("theory"), "'theory'");
  if (j.contains("models")) {
    if (!j.at("models").is_array()) throw InputError("'models' must be a list of paths");
    for (const auto& m : j.at("models")) s.models.push_back(path_of(m, "model path"));
  }
  if (j.contains("strategies")) s.strategies = path_of(j.at("strategies"), "'strategies'");
  if (j.contains("format")) s.format = require_string(j.at("format"), "'format'");
  return s;
}

}  // namespace contingent
