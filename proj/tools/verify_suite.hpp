#pragma once

#include <vector>

#include "relspin/check_report.hpp"
#include "scenario.hpp"

namespace relspin::cli {

/**
 * The full verification suite over one scenario: classical intrinsicality
 * calibration, the 3-vector no-go demonstrations, the quantum invariance
 * checks, the Poincare/Casimir and intrinsic-tensor identity sweeps, and
 * the electromagnetic coupling equivalences. Check order is fixed so the
 * emitted report is byte-stable for a given scenario and seed.
 */
std::vector<CheckReport> run_verify_suite(const Scenario& scenario, double field_orientation);

}  // namespace relspin::cli
