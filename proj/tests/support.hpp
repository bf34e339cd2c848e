#ifndef CONTINGENT_TESTS_SUPPORT_HPP
#define CONTINGENT_TESTS_SUPPORT_HPP

#include <filesystem>
#include <string>

#include "contingent/json_io.hpp"

namespace support {

inline contingent::Rational R(const char* text) { return contingent::parse_rational(text); }

inline std::filesystem::path fixture(const std::string& name) {
  return std::filesystem::path(CONTINGENT_FIXTURES_DIR) / name;
}

inline contingent::Assessment load_assessment(const std::string& name) {
  return contingent::assessment_from_json(contingent::read_json_file(fixture(name)));
}

inline contingent::SubjectiveModel load_model(const std::string& name) {
  return contingent::model_from_json(contingent::read_json_file(fixture(name)));
}

inline contingent::Theory load_theory(const std::string& name) {
  return contingent::theory_from_json(contingent::read_json_file(fixture(name)));
}

}  // namespace support

#endif  // CONTINGENT_TESTS_SUPPORT_HPP
