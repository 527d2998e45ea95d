#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "hypspec/suites.hpp"

namespace hypspec {

// deterministic part of a report: config echo, cases, summary without timing
nlohmann::ordered_json report_body(const VerificationReport& r);

// {"header": {timestamp, wall_time_seconds per suite}, "body": [report_body...]}
nlohmann::ordered_json report_document(const std::vector<VerificationReport>& reports);

void write_report(const std::vector<VerificationReport>& reports, const std::string& path);

// header row: input names (union, first-seen order), lhs, rhs, residual
void write_csv(const VerificationReport& r, const std::string& path);

}  // namespace hypspec
