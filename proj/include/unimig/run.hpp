#pragma once

#include "unimig/config.hpp"
#include "unimig/enumerate.hpp"
#include "unimig/report.hpp"

namespace unimig {

enum class Command { Verify, Migrative, Sweep, Enumerate, Audit, Heatmap };

Command parse_command(std::string_view name);

struct RunOptions {
  Command command = Command::Verify;
  RunConfig cfg;
  std::optional<int> grid_override;
  std::optional<CompareMode> mode_override;
  std::optional<std::chrono::milliseconds> budget;
  int jobs = 1;
};

/// Dispatches one batch command and assembles its report. report.failed is
/// set exactly when a check failed or any route disagreement was found, so
/// callers can map it straight to a nonzero exit status. Exact-mode reports
/// are byte-stable for a fixed config, except the summary's elapsed_ms.
Report run_command(const RunOptions& options);

/// Record layout for one decoded disagreement (also used by serialization
/// fixtures in the tests).
Record disagreement_record(const DecodedDisagreement& d, int grid_n);

}  // namespace unimig
