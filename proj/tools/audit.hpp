#pragma once

#include "cli.hpp"

namespace robinc::cli {

/// Runs the invariant battery over every catalog set, generator, test
/// function, n and radius; any failed check is a violation.
Outcome run_audit(const ExperimentConfig& cfg);

}  // namespace robinc::cli
