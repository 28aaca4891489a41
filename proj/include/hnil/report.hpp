#pragma once

#include "hnil/theorem_report.hpp"

#include <string>

namespace hnil {

enum class ReportFormat { human, json };

/// JSON output has the fixed key order n, n_lin, hnil, lower_bound,
/// upper_bound, holds, homology, witnesses, note, and rationals are written as
/// "p/q" strings, so equal reports serialize to identical bytes.
std::string emit_report(const TheoremReport& r, ReportFormat format, bool styled = false);

/// The note attached to every report about n_lin versus N(p).
extern const char* const kNLinNote;

}  // namespace hnil
