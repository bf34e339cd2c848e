#ifndef CONTINGENT_JSON_IO_HPP
#define CONTINGENT_JSON_IO_HPP

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "contingent/assessment.hpp"
#include "contingent/games.hpp"
#include "contingent/logic.hpp"
#include "contingent/model.hpp"

namespace contingent {

using Json = nlohmann::ordered_json;

// Every reader throws InputError on schema problems. Rationals are written as
// reduced "num/den" strings; readers also accept JSON integers.

Rational rational_from_json(const Json& j, const std::string& where);
Json rational_to_json(const Rational& r);

/// Reads {"atoms": [...]}; `fallback` is used when the key is absent and
/// must agree with it when present.
Language language_from_json(const Json& j, const std::optional<Language>& fallback = std::nullopt);

/// {"atoms": [..], "pi": {"<formula>": "n/d", ...}}
Assessment assessment_from_json(const Json& j, const std::optional<Language>& lang = std::nullopt);
Json assessment_to_json(const Assessment& a);

/// {"atoms"?: [..], "generators": ["<formula>", ...]}
Theory theory_from_json(const Json& j, const std::optional<Language>& lang = std::nullopt);
Json theory_to_json(const Theory& t);

/// {"atoms", "states", "t": {"<formula>": [labels]}, "lambda"?: {"w1|w2": "n/d"},
///  "masses"?: {"w1": "n/d"}, "truth_extension"?: "homomorphic" | "stored-only"}.
/// Masses give an additive likelihood; without
/// either key only the empty and full events carry a likelihood.
SubjectiveModel model_from_json(const Json& j, const std::optional<Language>& lang = std::nullopt);
Json model_to_json(const SubjectiveModel& m);

/// Likelihood over `states`: either {"lambda": {...}} / {"masses": {...}} or
/// the bare event map.
Likelihood likelihood_from_json(const Json& j, const SubjectiveModel& m);
Json likelihood_to_json(const Likelihood& l, const SubjectiveModel& m);

/// {"name"?: "s1", "payoffs": {"<formula>": "n/d"}}
Strategy strategy_from_json(const Json& j, const Language& lang, const std::string& default_name);

struct StrategySet {
  std::vector<Strategy> strategies;
  std::optional<std::string> chosen;
  std::optional<Json> candidate;  // parsed later against the base model
};

/// {"strategies": [...], "chosen"?: "s3", "candidate"?: {...}}, or a single
/// strategy object.
StrategySet strategies_from_json(const Json& j, const Language& lang);

Json read_json_file(const std::filesystem::path& path);

/// Paths named by a session file, resolved against its directory.
struct Session {
  std::optional<Language> language;
  std::optional<std::filesystem::path> assessment;
  std::optional<std::filesystem::path> theory;
  std::vector<std::filesystem::path> models;
  std::optional<std::filesystem::path> strategies;
  std::optional<std::string> format;
};

/// {"atoms"?, "assessment"?, "theory"?, "models"?: [...], "strategies"?, "format"?}
Session session_from_json(const Json& j, const std::filesystem::path& base_dir);

}  // namespace contingent

#endif  // CONTINGENT_JSON_IO_HPP
