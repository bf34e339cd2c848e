#ifndef CONTINGENT_REPORT_HPP
#define CONTINGENT_REPORT_HPP

#include <string>
#include <vector>

#include "contingent/assessment.hpp"
#include "contingent/construct.hpp"
#include "contingent/games.hpp"
#include "contingent/identify.hpp"
#include "contingent/json_io.hpp"

namespace contingent {

// Report builders. Key order is fixed and every list is emitted in a
// canonical order, so equal inputs give byte-identical output.

Json axiom_report_json(const AxiomReport& r);
Json check_report_json(const std::vector<AxiomReport>& reports);
Json build_report_json(const BuildOutcome& outcome);
Json identify_report_json(const std::vector<ImplicationVerdict>& verdicts, const SubtheoryResult* subtheory,
                          const std::string& method);
Json rationalize_report_json(const SubjectiveModel& base, const std::vector<Strategy>& strategies,
                             std::size_t chosen, const RationalizabilityResult& result);

/// Indented "key: value" rendering of a report.
std::string render_text(const Json& report);

}  // namespace contingent

#endif  // CONTINGENT_REPORT_HPP
