#pragma once

#include <string>

#include "partsum/identities.hpp"

namespace partsum {

enum class ReportFormat { Table, Csv, Json };

/// Renders the report deterministically; identical reports produce
/// byte-identical output. Rationals appear as exact "p/q" strings.
std::string render_report(const ScanReport& report, ReportFormat format);

/// 0 when every record is PASS, 1 otherwise.
int report_exit_status(const ScanReport& report);

}  // namespace partsum
