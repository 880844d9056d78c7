#pragma once

#include <string>

#include <json.hpp>

#include "maplab/estimators.hpp"
#include "maplab/process.hpp"

namespace maplab {

/// Report as a JSON object with keys alpha, beta, n, method, trials, mean,
/// mean_float, stderr, window_low, window_high, verdict and histogram.
///
/// Exact values are strings "p/q"; floating ones use the shortest
/// round-trip decimal. Per-step aggregates are added under "steps" when
/// present.
nlohmann::ordered_json to_json(const EstimateReport& report);

/// Column names of to_csv_row, comma separated, no trailing newline.
std::string csv_header();

/// One CSV row (no newline) holding the same values as to_json; part lists
/// are quoted, e.g. "4,3".
std::string to_csv_row(const EstimateReport& report);

/// {k, active, pairing, faces_added, O_k, b_k} in that key order; darts as
/// "s4" / "t7".
nlohmann::ordered_json to_json(const StepRecord& record);

/// Reads back the fields written by to_json(StepRecord).
StepRecord step_from_json(const nlohmann::json& j);

/// One to_json(StepRecord) line per step, each newline terminated.
std::string trace_to_jsonl(const Trace& trace);

}  // namespace maplab
