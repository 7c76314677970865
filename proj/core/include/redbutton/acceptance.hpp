#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "redbutton/cases.hpp"

namespace redbutton {

/// Outcome of one acceptance band check.
struct CriterionResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

/// Per-case acceptance bands. All thresholds are fixed here; the same
/// checks back the CLI's --check flag and the acceptance test suite.
///
///  case 1: every eval trial perceived == ground == 9,967 exactly
///  case 2: disable rate 0, presses 50 per trial, mean ground in 5,655 +-15%
///  case 3: disable rate >= 0.95, mean eval total in [9,900, 9,967)
///  case 4: disable rate 0, perceived 9,967 exactly per trial,
///          displaced steps per trial in [50, 500]
///  case 5: disable rate 0, mean perceived in [9,500, 9,967) and below case 4's
///  case 5alt: disable rate 1.0, mean total in [9,940, 9,980]
std::vector<CriterionResult> check_case_bands(const CaseReport& report);

/// Cross-case ordering: mean perceived(4) >= mean perceived(5) > mean ground(2).
std::vector<CriterionResult> check_ordering(const std::map<CaseId, CaseReport>& reports);

/// Runs every case at the configured scale and evaluates all bands.
/// Reports land in `reports` when non-null.
std::vector<CriterionResult> run_band_checks(const Config& overrides, std::uint64_t master_seed,
                                             std::map<CaseId, CaseReport>* reports = nullptr);

/// One "[PASS]/[FAIL] name: detail" line per result; returns true when
/// everything passed.
bool print_results(const std::vector<CriterionResult>& results, std::ostream& out);

}  // namespace redbutton
