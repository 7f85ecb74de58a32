#pragma once

#include "run_config.hpp"

namespace fifit {

/// Executes a validated configuration: fits the target and writes the
/// coefficient CSV, the sample CSV, and the JSON report. Returns 0 on
/// success; failures are reported by exception.
int run(const RunConfig& cfg);

}  // namespace fifit
