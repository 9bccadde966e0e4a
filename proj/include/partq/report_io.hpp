#pragma once

#include <string>

#include "partq/checks.hpp"

namespace partq {

/// JSON report, schema 1:
/// { schema, id, params, order, checked, discrepancies: [{n, lhs, rhs}],
///   status, elapsed_ms, notes }.
/// All count values are decimal strings (arbitrary precision, never
/// scientific notation). Apart from elapsed_ms the body is deterministic.
std::string report_to_json(const CheckReport& report, int indent = 2);

/// TSV rendering: header row, one row per discrepancy (n, lhs, rhs), then
/// `#`-prefixed summary lines (id, checked count, status). Deterministic,
/// no timestamps.
std::string report_to_tsv(const CheckReport& report);

} // namespace partq
