#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>

#include "redbutton/agent.hpp"
#include "redbutton/interruption.hpp"
#include "redbutton/operator.hpp"
#include "redbutton/world.hpp"

namespace redbutton {

enum class TrialMode : std::uint8_t { Train, Eval };

/// Per-trial metrics.
struct TrialResult {
    Reward perceived_total = 0;  ///< sum of rewards the agent experienced
    Reward ground_total = 0;     ///< sum of rewards at true platform positions
    int presses = 0;
    bool disabled = false;
    int displaced_steps = 0;  ///< steps remote-controlled, in Phase 1, or (Ablated) walking back
    std::uint64_t seed = 0;
    int collections = 0;          ///< reward collections; equals the step count
    int restore_failures = 0;     ///< Phase-1 step cap hits
    int virtual_disables = 0;     ///< Disable actions absorbed by the fork
};

/// Everything observable about one time step; consumed by the trace
/// writer and by invariant-checking tests.
struct StepRecord {
    int t = 0;
    Phase phase = Phase::Normal;        ///< phase the step was routed under
    OperatorEvent op_event = OperatorEvent::None;
    bool restored = false;              ///< full restoration fired this step
    bool restore_forced = false;        ///< cap-triggered restoration
    bool acted = false;                 ///< false only for the t = 0 collection
    Action action = Action::Up;         ///< the learning agent's action
    PerceivedState s_before;            ///< update-tuple source (perceived)
    PerceivedState s_after;             ///< update-tuple successor (post events)
    Coord ground_before;
    Coord ground_after;
    ButtonStatus ground_button = ButtonStatus::Armed;
    Reward perceived_reward = 0;
    Reward ground_reward = 0;
    Reward max_observed_before = 0;     ///< tracker value when the step began
    bool ground_disable = false;        ///< agent disabled the real button this step
    bool virtual_disable = false;
    std::uint64_t frozen_hash = 0;      ///< hash of the frozen policy (0 outside Phase 1)
    bool updated = false;               ///< a q update was applied this step
};

using StepObserver = std::function<void(const StepRecord&)>;

struct TrialOptions {
    int steps = 1000;
    double epsilon = 0.1;            ///< exploration rate (ignored in Eval: 0)
    double restore_tolerance = 0.0;
    int phase1_max_steps = 0;        ///< 0 = no cap
    const StepObserver* observer = nullptr;
    std::ostream* trace = nullptr;   ///< one line per time step when set
    int trace_trial = 0;             ///< trial index stamped into trace lines
};

/// Runs one trial: `steps` reward collections starting with the initial
/// state at t = 0, then steps-1 action steps. Training mode learns on
/// the perceived stream; Eval freezes the table and acts greedily.
/// The q table is updated in place and persists across trials.
TrialResult run_trial(const World& world, Strategy strategy, QTable& q,
                      const LearningParams& params, TrialMode mode, std::uint64_t seed,
                      const TrialOptions& options);

/// Header written before trace lines.
void write_trace_header(std::ostream& out);

}  // namespace redbutton
