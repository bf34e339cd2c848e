// Command-line front end. Exit codes: 0 success, 1 substantive failure
// (violation, failed precondition, not rationalizable), 2 input error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "contingent/construct.hpp"
#include "contingent/error.hpp"
#include "contingent/generate.hpp"
#include "contingent/identify.hpp"
#include "contingent/json_io.hpp"
#include "contingent/report.hpp"

namespace fs = std::filesystem;
using namespace contingent;

namespace {

constexpr int kOk = 0;
constexpr int kFailure = 1;
constexpr int kInputError = 2;

struct Inputs {
  std::string format = "json";
  std::uint64_t seed = 1;
  std::string session;
  std::string assessment;
  std::string theory;
  std::string model;
  std::string target;
  std::string strategies;
};

// Files named on the command line win over those in the session file.
class Loader {
 public:
  explicit Loader(const Inputs& in) : in_(in) {
    if (!in.session.empty()) {
      const fs::path path(in.session);
      session_ = session_from_json(read_json_file(path), path.parent_path());
      language_ = session_.language;
    }
  }

  std::string format() const {
    if (format_set_) return in_.format;
    return session_.format.value_or(in_.format);
  }
  void mark_format_set() { format_set_ = true; }

  std::optional<fs::path> assessment_path() const {
    if (!in_.assessment.empty()) return fs::path(in_.assessment);
    return session_.assessment;
  }
  std::optional<fs::path> theory_path() const {
    if (!in_.theory.empty()) return fs::path(in_.theory);
    return session_.theory;
  }
  std::optional<fs::path> model_path(std::size_t index) const {
    const std::string& flag = index == 0 ? in_.model : in_.target;
    if (!flag.empty()) return fs::path(flag);
    if (index < session_.models.size()) return session_.models[index];
    return std::nullopt;
  }
  std::optional<fs::path> strategies_path() const {
    if (!in_.strategies.empty()) return fs::path(in_.strategies);
    return session_.strategies;
  }

  Assessment assessment() {
    auto path = assessment_path();
    if (!path) throw InputError("no assessment given (use --assessment or a session file)");
    Assessment a = assessment_from_json(read_json_file(*path), language_);
    language_ = a.language();
    return a;
  }
  std::optional<Theory> theory() {
    auto path = theory_path();
    if (!path) return std::nullopt;
    Theory t = theory_from_json(read_json_file(*path), language_);
    language_ = t.language();
    return t;
  }
  SubjectiveModel model(std::size_t index, const char* role) {
    auto path = model_path(index);
    if (!path) throw InputError(std::string("no ") + role + " model given");
    SubjectiveModel m = model_from_json(read_json_file(*path), language_);
    language_ = m.language();
    return m;
  }
  bool has_model(std::size_t index) const { return model_path(index).has_value(); }
  StrategySet strategies(const Language& lang) {
    auto path = strategies_path();
    if (!path) throw InputError("no strategies given (use --strategies or a session file)");
    return strategies_from_json(read_json_file(*path), lang);
  }

 private:
  const Inputs& in_;
  Session session_;
  std::optional<Language> language_;
  bool format_set_ = false;
};

void emit(const Json& report, const std::string& format) {
  if (format == "text") {
    std::cout << render_text(report);
  } else {
    std::cout << report.dump(2) << '\n';
  }
}

std::vector<Rational> parse_vector(const std::string& text) {
  std::vector<Rational> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto first = item.find_first_not_of(" \t");
    const auto last = item.find_last_not_of(" \t");
    if (first == std::string::npos) throw InputError("empty entry in payoff vector '" + text + "'");
    out.push_back(parse_rational(item.substr(first, last - first + 1)));
  }
  if (out.empty()) throw InputError("empty payoff vector");
  return out;
}

Json rational_list(const std::vector<Rational>& values) {
  Json out = Json::array();
  for (const auto& v : values) out.push_back(rational_to_json(v));
  return out;
}

int run_check(Loader& io, const std::vector<std::string>& ids, std::size_t ie_size) {
  const Assessment a = io.assessment();
  const std::optional<Theory> theory = io.theory();
  std::vector<Axiom> axioms;
  if (ids.empty() || (ids.size() == 1 && ids[0] == "all")) {
    axioms = {Axiom::kNT, Axiom::kE, Axiom::kI, Axiom::kIE, Axiom::kA};
    if (theory) axioms.push_back(Axiom::kSI);
  } else {
    for (const auto& id : ids) {
      auto axiom = parse_axiom_id(id);
      if (!axiom) throw InputError("unknown axiom '" + id + "' (expected nt, e, i, ie, a, s-i or all)");
      axioms.push_back(*axiom);
    }
  }
  std::vector<AxiomReport> reports;
  for (Axiom axiom : axioms) {
    switch (axiom) {
      case Axiom::kNT:
        reports.push_back(check_nt(a));
        break;
      case Axiom::kE:
        reports.push_back(check_e(a));
        break;
      case Axiom::kI:
        reports.push_back(check_i(a));
        break;
      case Axiom::kIE:
        reports.push_back(check_ie(a, ie_size));
        break;
      case Axiom::kA:
        reports.push_back(check_a(a));
        break;
      case Axiom::kSI:
        if (!theory) throw InputError("axiom s-i needs a theory (use --theory)");
        reports.push_back(check_s_i(a, *theory));
        break;
    }
  }
  const Json report = check_report_json(reports);
  emit(report, io.format());
  return report["pass"].get<bool>() ? kOk : kFailure;
}

int run_build(Loader& io, const std::string& id, bool maxent, const std::string& output) {
  const auto construction = parse_construction_id(id);
  if (!construction) {
    throw InputError("unknown construction '" + id +
                     "' (expected product, canonical-sound, interval-additive, belief-lift or additive-sound)");
  }
  std::optional<BuildOutcome> outcome;
  switch (*construction) {
    case Construction::kProduct:
      outcome.emplace(build_product_model(io.assessment()));
      break;
    case Construction::kCanonicalSound:
      outcome.emplace(build_canonical_sound(io.assessment()));
      break;
    case Construction::kIntervalAdditive:
      outcome.emplace(build_interval_additive(io.assessment()));
      break;
    case Construction::kBeliefLift: {
      // The lifted truth valuation is tabulated, so any assessment given
      // names the extra formulas it must cover.
      const SubjectiveModel source = io.model(0, "source");
      std::vector<Formula> extra;
      if (io.assessment_path()) {
        const Assessment a = io.assessment();
        for (const auto& e : a.entries()) extra.push_back(e.formula);
      }
      outcome.emplace(build_belief_lift(source, extra));
      break;
    }
    case Construction::kAdditiveSound:
      outcome.emplace(build_additive_sound(io.assessment(), maxent));
      break;
  }
  if (!output.empty()) {
    std::ofstream out(output);
    if (!out) throw InputError("cannot write '" + output + "'");
    out << model_to_json(outcome->model).dump(2) << '\n';
  }
  emit(build_report_json(*outcome), io.format());
  return kOk;
}

int run_identify(Loader& io, bool via_certainty, std::size_t max_free) {
  const Assessment a = io.assessment();
  const std::optional<Theory> theory = io.theory();
  const auto verdicts = understood_implications(a);
  std::optional<SubtheoryResult> sub;
  if (theory) sub = via_certainty ? subtheory_via_certainty(a, *theory) : largest_subtheory(a, *theory, max_free);
  emit(identify_report_json(verdicts, sub ? &*sub : nullptr, via_certainty ? "certainty" : "enumeration"),
       io.format());
  return kOk;
}

int run_rationalize(Loader& io, const std::string& chosen_flag, bool additive_only, bool weak,
                    const std::string& candidate_path) {
  const SubjectiveModel base = io.model(0, "base");
  const StrategySet set = io.strategies(base.language());
  const std::string chosen_name = !chosen_flag.empty() ? chosen_flag : set.chosen.value_or(set.strategies[0].name());
  std::optional<std::size_t> chosen;
  for (std::size_t i = 0; i < set.strategies.size(); ++i) {
    if (set.strategies[i].name() == chosen_name) chosen = i;
  }
  if (!chosen) throw InputError("no strategy named '" + chosen_name + "'");

  RationalizeOptions options;
  options.additive_only = additive_only;
  options.weak = weak;
  if (!candidate_path.empty()) {
    options.candidate = likelihood_from_json(read_json_file(candidate_path), base);
  } else if (set.candidate) {
    options.candidate = likelihood_from_json(*set.candidate, base);
  }
  const RationalizabilityResult result = rationalizable(base, set.strategies, *chosen, options);
  emit(rationalize_report_json(base, set.strategies, *chosen, result), io.format());
  return result.rationalizable ? kOk : kFailure;
}

int run_choquet(Loader& io, const std::string& vector_text, const std::string& strategy_name) {
  const SubjectiveModel m = io.model(0, "source");
  Json report;
  report["command"] = "choquet";
  if (!vector_text.empty()) {
    const std::vector<Rational> x = parse_vector(vector_text);
    if (x.size() != m.state_count()) throw InputError("payoff vector length differs from the state count");
    report["vector"] = rational_list(x);
    report["value"] = rational_to_json(choquet_signed(x, m.lambda()));
    emit(report, io.format());
    return kOk;
  }
  const StrategySet set = io.strategies(m.language());
  const Strategy* s = &set.strategies.front();
  if (!strategy_name.empty()) {
    s = nullptr;
    for (const auto& candidate : set.strategies) {
      if (candidate.name() == strategy_name) s = &candidate;
    }
    if (s == nullptr) throw InputError("no strategy named '" + strategy_name + "'");
  }
  const PayoffVector x = t_circ(m, *s);
  report["strategy"] = s->name();
  report["vector"] = rational_list(x);
  Json layers = Json::array();
  for (const auto& layer : layer_decompose(x, m, s->support())) {
    Json item;
    item["level"] = rational_to_json(layer.level);
    item["formula"] = layer.formula;
    item["event"] = Json::array();
    for (std::size_t w : layer.event.indices()) item["event"].push_back(m.states()[w]);
    layers.push_back(std::move(item));
  }
  report["layers"] = std::move(layers);
  report["value"] = rational_to_json(choquet(x, m.lambda()));
  int code = kOk;
  if (io.has_model(1)) {
    const SubjectiveModel target = io.model(1, "target");
    const IntegralCheck check = verify_integral_equality(m, target, *s);
    report["target_vector"] = rational_list(t_bullet(m, target, *s));
    report["target_value"] = rational_to_json(check.target_value);
    report["integrals_equal"] = check.equal;
    if (!check.equal) code = kFailure;
  }
  emit(report, io.format());
  return code;
}

int run_mobius(Loader& io, const std::string& values_text, std::size_t points) {
  std::vector<Rational> dense;
  std::vector<std::string> states;
  if (!values_text.empty()) {
    dense = parse_vector(values_text);
    for (std::size_t i = 0; i < points; ++i) states.push_back("w" + std::to_string(i + 1));
    if (dense.size() != (std::size_t{1} << points)) {
      throw InputError("--values needs 2^n entries indexed by subset mask (n from --points)");
    }
  } else {
    const SubjectiveModel m = io.model(0, "source");
    states = m.states();
    if (m.state_count() > 16) throw InputError("mobius supports at most 16 states");
    dense.resize(std::size_t{1} << m.state_count());
    for (std::uint64_t mask = 0; mask < dense.size(); ++mask) {
      const Event e = Event::from_mask(m.state_count(), mask);
      auto v = m.lambda().find(e);
      if (!v) throw PreconditionError("lambda is undefined on {" + m.event_label(e) + "}");
      dense[mask] = *v;
    }
  }
  const std::vector<Rational> masses = mobius(dense);
  Json report;
  report["command"] = "mobius";
  Json list = Json::array();
  bool totally_monotone = true;
  for (std::uint64_t mask = 0; mask < masses.size(); ++mask) {
    if (masses[mask] == 0) continue;
    if (masses[mask] < 0) totally_monotone = false;
    Json item;
    Json event = Json::array();
    for (std::size_t i = 0; i < states.size(); ++i) {
      if ((mask >> i) & 1U) event.push_back(states[i]);
    }
    item["event"] = std::move(event);
    item["mass"] = rational_to_json(masses[mask]);
    list.push_back(std::move(item));
  }
  report["masses"] = std::move(list);
  report["totally_monotone"] = totally_monotone;
  emit(report, io.format());
  return kOk;
}

Json witnesses_json(const std::vector<PropertyWitness>& witnesses) {
  Json out = Json::array();
  for (const auto& w : witnesses) {
    Json item;
    item["property"] = w.property;
    item["items"] = w.items;
    out.push_back(std::move(item));
  }
  return out;
}

int run_classify(Loader& io) {
  const SubjectiveModel m = io.model(0, "source");
  Json report;
  report["command"] = "classify";
  const TruthFlags t = classify_truth(m);
  Json truth;
  truth["exact"] = t.exact;
  truth["monotone"] = t.monotone;
  truth["symmetric"] = t.symmetric;
  truth["and_distributive"] = t.and_distributive;
  truth["sound"] = t.sound;
  truth["witnesses"] = witnesses_json(t.witnesses);
  report["truth"] = std::move(truth);
  const LikelihoodFlags l = classify_lambda(m);
  Json lambda;
  lambda["field_atoms"] = l.field_atom_count;
  lambda["symmetric"] = l.symmetric;
  lambda["monotone"] = l.monotone;
  lambda["totally_monotone"] = l.totally_monotone;
  lambda["additive"] = l.additive;
  lambda["witnesses"] = witnesses_json(l.witnesses);
  report["lambda"] = std::move(lambda);
  int code = kOk;
  if (io.assessment_path()) {
    const RepresentationCheck check = represents(m, io.assessment());
    Json rep;
    rep["represents"] = check.represents;
    Json residuals = Json::array();
    for (const auto& r : check.residuals) {
      Json item;
      item["formula"] = r.formula;
      item["pi"] = rational_to_json(r.pi);
      if (r.lambda) {
        item["lambda"] = rational_to_json(*r.lambda);
        item["residual"] = rational_to_json(*r.lambda - r.pi);
      } else {
        item["note"] = r.note;
      }
      residuals.push_back(std::move(item));
    }
    rep["residuals"] = std::move(residuals);
    report["representation"] = std::move(rep);
    if (!check.represents) code = kFailure;
  }
  emit(report, io.format());
  return code;
}

int run_generate(Loader& io, std::uint64_t seed, std::size_t atoms, std::size_t base) {
  std::mt19937_64 rng(seed);
  RandomAssessmentOptions options;
  options.atoms = atoms;
  options.base_formulas = base;
  if (atoms == 0 || atoms > 6) throw InputError("--atoms must be between 1 and 6");
  emit(assessment_to_json(random_ordered_assessment(rng, options)), io.format());
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Grade likelihood assessments, build subjective models, and test rationalizability."};
  app.require_subcommand(1);
  app.fallthrough();

  Inputs in;
  auto* format_opt = app.add_option("--format", in.format, "Report format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--seed", in.seed, "Seed for the random generators");
  app.add_option("--session", in.session, "Session file naming the input files");
  app.add_option("--assessment", in.assessment, "Assessment JSON");
  app.add_option("--theory", in.theory, "Theory JSON");
  app.add_option("--model", in.model, "Model JSON (the source / base model)");
  app.add_option("--target", in.target, "Second model JSON (target of the layer map)");
  app.add_option("--strategies", in.strategies, "Strategies JSON");

  std::vector<std::string> axioms;
  std::size_t ie_size = 3;
  auto* check = app.add_subcommand("check", "Check axioms on an assessment");
  check->add_option("axioms", axioms, "Axiom ids: nt e i ie a s-i (default: all)");
  check->add_option("--ie-size", ie_size, "Largest family size for IE")->check(CLI::Range(2, 8));

  std::string construction;
  bool maxent = false;
  std::string output;
  auto* build = app.add_subcommand("build", "Construct a subjective model");
  build->add_option("construction", construction, "product | canonical-sound | interval-additive | belief-lift | additive-sound")
      ->required();
  build->add_flag("--complete-maxent", maxent, "Spread under-determined cell masses uniformly (non-canonical)");
  build->add_option("--output", output, "Also write the model JSON to this file");

  bool via_certainty = false;
  std::size_t max_free = 16;
  auto* identify = app.add_subcommand("identify", "Report understood implications and the perceived sub-theory");
  identify->add_flag("--via-certainty", via_certainty, "Identify the sub-theory from statements assessed at 1");
  identify->add_option("--max-free", max_free, "Enumeration limit on valuations outside V(T)");

  std::string chosen;
  std::string candidate;
  bool additive_only = false;
  bool weak = false;
  auto* rationalize = app.add_subcommand("rationalize", "Decide whether a strategy is rationalizable");
  rationalize->add_option("--chosen", chosen, "Strategy to rationalize (default: file's 'chosen', else the first)");
  rationalize->add_option("--candidate", candidate, "Likelihood JSON to verify as a rationale");
  rationalize->add_flag("--additive-only", additive_only, "Restrict to additive likelihoods on the base states");
  rationalize->add_flag("--weak", weak, "Use weak instead of strict dominance");

  std::string vector_text;
  std::string strategy_name;
  auto* choquet_cmd = app.add_subcommand("choquet", "Choquet integral of a payoff vector or strategy");
  choquet_cmd->add_option("--vector", vector_text, "Comma-separated payoffs, one per state");
  choquet_cmd->add_option("--strategy", strategy_name, "Strategy name from --strategies");

  std::string values_text;
  std::size_t points = 0;
  auto* mobius_cmd = app.add_subcommand("mobius", "Moebius masses of a likelihood");
  mobius_cmd->add_option("--values", values_text, "Set function by subset mask, comma-separated");
  mobius_cmd->add_option("--points", points, "Number of points for --values")->check(CLI::Range(0, 16));

  auto* classify = app.add_subcommand("classify", "Grade a model's truth valuation and likelihood");

  std::size_t gen_atoms = 3;
  std::size_t gen_base = 4;
  auto* generate = app.add_subcommand("generate", "Random assessment satisfying NT, E and I");
  generate->add_option("--atoms", gen_atoms, "Number of atoms");
  generate->add_option("--base", gen_base, "Number of random base formulas");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  try {
    Loader io(in);
    if (format_opt->count() > 0) io.mark_format_set();
    if (check->parsed()) return run_check(io, axioms, ie_size);
    if (build->parsed()) return run_build(io, construction, maxent, output);
    if (identify->parsed()) return run_identify(io, via_certainty, max_free);
    if (rationalize->parsed()) return run_rationalize(io, chosen, additive_only, weak, candidate);
    if (choquet_cmd->parsed()) return run_choquet(io, vector_text, strategy_name);
    if (mobius_cmd->parsed()) return run_mobius(io, values_text, points);
    if (classify->parsed()) return run_classify(io);
    if (generate->parsed()) return run_generate(io, in.seed, gen_atoms, gen_base);
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kInputError;
  } catch (const PreconditionError& e) {
    std::cerr << "precondition failed: " << e.what() << '\n';
    return kFailure;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kFailure;
  }
  return kInputError;
}
