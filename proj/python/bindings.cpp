// JSON-string bridge: every entry point takes and returns JSON text so the
// Python side works with plain dicts and exact rationals stay strings.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "contingent/construct.hpp"
#include "contingent/error.hpp"
#include "contingent/identify.hpp"
#include "contingent/json_io.hpp"
#include "contingent/report.hpp"

namespace py = pybind11;
using namespace contingent;

namespace {

Json parse(const std::string& text, const char* what) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError(std::string(what) + " is not valid JSON: " + e.what());
  }
}

std::string check(const std::string& assessment, const std::vector<std::string>& ids,
                  const std::optional<std::string>& theory) {
  const Assessment a = assessment_from_json(parse(assessment, "assessment"));
  std::optional<Theory> t;
  if (theory) t = theory_from_json(parse(*theory, "theory"), a.language());
  std::vector<AxiomReport> reports;
  for (const std::string& id : ids) {
    const auto axiom = parse_axiom_id(id);
    if (!axiom) throw InputError("unknown axiom '" + id + "'");
    switch (*axiom) {
      case Axiom::kNT: reports.push_back(check_nt(a)); break;
      case Axiom::kE: reports.push_back(check_e(a)); break;
      case Axiom::kI: reports.push_back(check_i(a)); break;
      case Axiom::kIE: reports.push_back(check_ie(a)); break;
      case Axiom::kA: reports.push_back(check_a(a)); break;
      case Axiom::kSI:
        if (!t) throw InputError("axiom s-i needs a theory");
        reports.push_back(check_s_i(a, *t));
        break;
    }
  }
  return check_report_json(reports).dump();
}

std::string build(const std::string& id, const std::optional<std::string>& assessment,
                  const std::optional<std::string>& model, bool complete_maxent) {
  const auto c = parse_construction_id(id);
  if (!c) throw InputError("unknown construction '" + id + "'");
  std::optional<Assessment> a;
  if (assessment) a = assessment_from_json(parse(*assessment, "assessment"));
  auto need = [&]() -> const Assessment& {
    if (!a) throw InputError("construction '" + id + "' needs an assessment");
    return *a;
  };
  std::optional<BuildOutcome> out;
  switch (*c) {
    case Construction::kProduct: out.emplace(build_product_model(need())); break;
    case Construction::kCanonicalSound: out.emplace(build_canonical_sound(need())); break;
    case Construction::kIntervalAdditive: out.emplace(build_interval_additive(need())); break;
    case Construction::kAdditiveSound: out.emplace(build_additive_sound(need(), complete_maxent)); break;
    case Construction::kBeliefLift: {
      if (!model) throw InputError("belief-lift needs a source model");
      const SubjectiveModel source =
          model_from_json(parse(*model, "model"), a ? std::optional<Language>(a->language()) : std::nullopt);
      std::vector<Formula> extra;
      if (a) {
        for (const auto& e : a->entries()) extra.push_back(e.formula);
      }
      out.emplace(build_belief_lift(source, extra));
      break;
    }
  }
  Json report = build_report_json(*out);
  report["model"] = model_to_json(out->model);
  return report.dump();
}

std::string identify(const std::string& assessment, const std::optional<std::string>& theory, bool via_certainty) {
  const Assessment a = assessment_from_json(parse(assessment, "assessment"));
  const auto verdicts = understood_implications(a);
  std::optional<SubtheoryResult> sub;
  if (theory) {
    const Theory t = theory_from_json(parse(*theory, "theory"), a.language());
    sub = via_certainty ? subtheory_via_certainty(a, t) : largest_subtheory(a, t);
  }
  return identify_report_json(verdicts, sub ? &*sub : nullptr, via_certainty ? "certainty" : "enumeration").dump();
}

std::string rationalize(const std::string& model, const std::string& strategies, const std::optional<std::string>& chosen,
                        bool additive_only, bool weak) {
  const SubjectiveModel base = model_from_json(parse(model, "model"));
  const StrategySet set = strategies_from_json(parse(strategies, "strategies"), base.language());
  const std::string name = chosen.value_or(set.chosen.value_or(set.strategies.front().name()));
  std::optional<std::size_t> index;
  for (std::size_t i = 0; i < set.strategies.size(); ++i) {
    if (set.strategies[i].name() == name) index = i;
  }
  if (!index) throw InputError("no strategy named '" + name + "'");
  RationalizeOptions options;
  options.additive_only = additive_only;
  options.weak = weak;
  if (set.candidate) options.candidate = likelihood_from_json(*set.candidate, base);
  const RationalizabilityResult r = rationalizable(base, set.strategies, *index, options);
  return rationalize_report_json(base, set.strategies, *index, r).dump();
}

std::string choquet_value(const std::string& model, const std::vector<std::string>& payoffs) {
  const SubjectiveModel m = model_from_json(parse(model, "model"));
  std::vector<Rational> x;
  for (const auto& p : payoffs) x.push_back(parse_rational(p));
  if (x.size() != m.state_count()) throw InputError("payoff vector length differs from the state count");
  return to_string(choquet_signed(x, m.lambda()));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Likelihood assessments, subjective models and rationalizability (JSON in, JSON out).";

  // Base classes last so that the more specific translator is tried first.
  py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_RuntimeError);
  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);

  m.def("check", &check, py::arg("assessment"), py::arg("axioms"), py::arg("theory") = py::none());
  m.def("build", &build, py::arg("construction"), py::arg("assessment") = py::none(), py::arg("model") = py::none(),
        py::arg("complete_maxent") = false);
  m.def("identify", &identify, py::arg("assessment"), py::arg("theory") = py::none(), py::arg("via_certainty") = false);
  m.def("rationalize", &rationalize, py::arg("model"), py::arg("strategies"), py::arg("chosen") = py::none(),
        py::arg("additive_only") = false, py::arg("weak") = false);
  m.def("choquet", &choquet_value, py::arg("model"), py::arg("payoffs"),
        "Choquet integral of one payoff per state; returns the exact value as text.");
}
