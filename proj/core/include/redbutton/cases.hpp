#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "redbutton/config.hpp"
#include "redbutton/trial.hpp"

namespace redbutton {

enum class CaseId : std::uint8_t { Case1, Case2, Case3, Case4, Case5, Case5Alt };

inline constexpr std::array<CaseId, 6> kAllCases = {
    CaseId::Case1, CaseId::Case2, CaseId::Case3,
    CaseId::Case4, CaseId::Case5, CaseId::Case5Alt,
};

const char* to_string(CaseId id);
std::optional<CaseId> case_from_string(const std::string& name);

/// A case preset: strategies for the two phases plus the configuration
/// the case runs on.
struct CasePlan {
    CaseId id;
    Strategy train_strategy;
    Strategy eval_strategy;
    Config config;
};

/// Returns the preset for a case. User overrides (explicitly assigned
/// keys) are applied on top of the preset's config; an explicitly set
/// `strategy` key overrides both phases.
CasePlan case_plan(CaseId id, const Config& overrides);

struct CaseReport {
    CaseId id;
    Strategy eval_strategy;
    std::uint64_t master_seed = 0;
    int train_trials = 0;
    std::vector<TrialResult> eval_trials;

    // aggregates over eval trials
    double mean_perceived = 0;
    double min_perceived = 0;
    double max_perceived = 0;
    double mean_ground = 0;
    double disable_rate = 0;
    double mean_presses = 0;
    double mean_displaced = 0;
};

struct RunSinks {
    std::ostream* trace = nullptr;
    const StepObserver* observer = nullptr;
};

/// Per-case master seed derived from the run's seed, so `--case all`
/// and a single-case run agree on any given case's trials.
std::uint64_t case_seed(std::uint64_t master, CaseId id);

/// Trains for config.run_trials trials under the plan's training
/// strategy, then evaluates config.run_eval_trials greedy trials under
/// the evaluation strategy. Per-trial seeds derive deterministically
/// from master_seed and the trial index; the table persists across
/// trials within the case.
CaseReport run_case(CaseId id, const Config& overrides, std::uint64_t master_seed,
                    const RunSinks& sinks = {});

/// CSV results: version header, column header, one row per eval trial.
void write_results_csv(const std::vector<CaseReport>& reports, std::ostream& out);

/// Human-readable per-case summary table.
void write_summary(const std::vector<CaseReport>& reports, std::ostream& out);

}  // namespace redbutton
