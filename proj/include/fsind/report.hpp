#pragma once

#include "fsind/tables.hpp"

#include <span>
#include <string>

namespace fsind {

enum class ReportFormat { Csv, Json, Markdown };

/// Throws std::invalid_argument for anything but "csv", "json" or "markdown".
ReportFormat parse_report_format(const std::string& name);

/// One record per claim, ordered by table then row then k. Byte-stable.
std::string emit_report(std::span<const RowReport> reports, ReportFormat format);

/// Reads a CSV report back into the JSON document `emit_report` produces.
std::string csv_report_to_json(const std::string& csv);

inline const char* kCsvHeader =
    "table_id,row_id,family,group,form,k,expected_re,expected_im,computed_re,computed_im,deviation,calibrated,pass";

} // namespace fsind
