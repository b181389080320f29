#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "swm/report.hpp"

namespace swm::cli {

enum class Format { json, csv };

nlohmann::ordered_json to_json(const VerificationReport& r);
VerificationReport report_from_json(const nlohmann::json& j);
ReportList reports_from_json(const nlohmann::json& j);

void emit_report(const ReportList& reports, Format format, std::ostream& out);

/// Quotes a CSV field when it contains a comma, quote or line break.
std::string csv_field(const std::string& s);

/// Runs the command line `args` (without the program name). Returns 0 when
/// every verification passes, 1 on a failure or an output error, 2 on a usage
/// or precondition error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace swm::cli
