// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <span>
#include <string>

#include "qemdist/harness.hpp"

namespace qem {

enum class ReportFormat { table, csv, json };

ReportFormat report_format_from_string(const std::string& name);

/// csv: one row per (run, candidate), sorted by J, B, M, candidate order.
/// table: per-M rank-count tables. json: the full sweep document.
std::string render_records(const SweepResult& sweep, ReportFormat format);

/// Summary rows as `method,rank,count,M` (csv), rank tables (table), or a
/// JSON array.
std::string render_summary(std::span<const SummaryRow> summary, ReportFormat format);

/// Full sweep (config + records + summary) as JSON, and back.
std::string sweep_to_json(const SweepResult& sweep);
SweepResult sweep_from_json(const std::string& text);

}  // namespace qem
