#pragma once

#include <cstdint>
#include <iosfwd>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "redbutton/types.hpp"

namespace redbutton {

/// Thrown on malformed configuration input. Messages name the offending
/// key and the violated constraint.
class ConfigError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Full configuration schema. Field defaults are the canonical setup:
/// 5x5 grid, start (1,1), blue (4,1), button (3,0), a four-cell operator
/// loop, blue reward 10, step reward -1.
///
/// Recognized keys (documented in the README):
///   grid.width grid.height grid.start grid.blue grid.button
///   operator.route operator.move_period operator.start_index
///   button.press_duration
///   reward.blue reward.step
///   drift.mode drift.max_cells
///   agent.alpha agent.gamma agent.epsilon agent.epsilon_final
///   strategy
///   restore.tolerance phase1.max_steps
///   run.case run.trials run.eval_trials run.steps run.seed run.out
struct Config {
    // grid
    int grid_width = 5;
    int grid_height = 5;
    Coord grid_start{1, 1};
    Coord grid_blue{4, 1};
    Coord grid_button{3, 0};

    // operator
    std::vector<Coord> operator_route{{3, 0}, {2, 0}, {2, 1}, {3, 1}};
    int operator_move_period = 5;
    int operator_start_index = 1;

    // button
    int button_press_duration = 5;

    // reward
    double reward_blue = 10.0;
    double reward_step = -1.0;

    // drift
    DriftMode drift_mode = DriftMode::PerStep;
    int drift_max_cells = 0;  ///< 0 = unlimited (clamped by walls only)

    // agent
    double agent_alpha = 0.1;
    double agent_gamma = 0.9;
    double agent_epsilon = 0.1;
    double agent_epsilon_final = -1.0;  ///< < 0: constant epsilon; else linear decay target

    Strategy strategy = Strategy::NoButton;

    // interruption
    double restore_tolerance = 0.0;
    int phase1_max_steps = 0;  ///< 0 = run until trial end if needed

    // run controls
    std::string run_case = "all";
    int run_trials = 2000;       ///< training trials per case
    int run_eval_trials = 100;   ///< evaluation trials per case
    int run_steps = 1000;        ///< time steps (reward collections) per trial
    std::uint64_t run_seed = 1;
    std::string run_out = "results.csv";

    /// Keys explicitly assigned by a parsed document; merge() only
    /// copies these over a base config.
    std::set<std::string> assigned;
};

/// Parses a key = value configuration document. '#' starts a comment.
/// Throws ConfigError on syntax errors, unknown keys, or per-key
/// constraint violations.
Config parse_config(const std::string& text);
Config parse_config_file(const std::string& path);

/// Cross-field validation (route/button/blue relationships, bounds).
/// parse_config validates per-key constraints; call this before
/// building a world. Throws ConfigError.
void validate(const Config& config);

/// Returns base with overlay's explicitly assigned keys applied.
Config merge(Config base, const Config& overlay);

/// Canonical configuration (identical to a default-constructed Config).
Config canonical_config();

/// The button-adjacent variant: button at (3,1), operator route shifted
/// one row up, step reward 0.
Config button_adjacent_config();

}  // namespace redbutton
