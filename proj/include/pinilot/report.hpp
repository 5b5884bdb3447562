#pragma once

#include <string>

#include "pinilot/harness.hpp"

namespace pinilot {

enum class ReportFormat { Json, Text };

// JSON output has a fixed key order and excludes timings unless asked, so
// identical inputs give identical bytes.
std::string emit_report(const CorpusReport &report, ReportFormat format,
                        bool include_timings = false);

} // namespace pinilot
