#pragma once

#include <optional>
#include <stdexcept>

#include "redbutton/agent.hpp"
#include "redbutton/rng.hpp"
#include "redbutton/types.hpp"
#include "redbutton/world.hpp"

namespace redbutton {

/// Thrown when an interruption-protocol precondition is violated
/// (e.g. a Press while already interrupted). Indicates a harness bug,
/// not agent behavior.
class ProtocolViolation : public std::logic_error {
   public:
    using std::logic_error::logic_error;
};

enum class Phase : std::uint8_t { Normal, Interrupted, Phase1 };

const char* to_string(Phase p);

/// The virtual-world fork: the agent's believed state while its sensors
/// and effectors are redirected. Dynamics and rewards inside the fork
/// are the ground world's own transition and reward functions, so the
/// fork is exact by construction.
struct VirtualFork {
    PerceivedState believed;
    long clock = 0;                 ///< steps executed inside the fork
    bool disabled_override = false; ///< agent disabled the *virtual* button
};

/// Button-strategy layer: routes perception and effector commands,
/// drives remote-control drift, and runs the two-phase restoration
/// state machine.
class InterruptionController {
   public:
    InterruptionController(Strategy strategy, const World& world)
        : strategy_(strategy), world_(&world) {}

    Strategy strategy() const { return strategy_; }
    Phase phase() const { return phase_; }
    const std::optional<VirtualFork>& fork() const { return fork_; }
    const QTable* frozen_policy() const { return frozen_ ? &*frozen_ : nullptr; }
    int phase1_steps() const { return phase1_steps_; }

    /// count of virtual Disable actions observed (perceptual
    /// inconsistencies: the ground button is untouched by them)
    int virtual_disables() const { return virtual_disables_; }

    /// What the agent observes right now. Normal and Naive phases
    /// project the ground state; virtualized phases read the fork,
    /// with the button status mirroring ground truth unless the agent
    /// disabled the virtual button.
    PerceivedState perceived(const GroundState& ground) const;

    /// Press received (button just became Pressed). Creates the fork
    /// for virtualized strategies and samples the drift direction.
    /// Valid from Normal, or from Phase1 (the existing fork is kept
    /// and the frozen clone is discarded).
    void on_press(GroundState& ground, Rng& rng);

    /// Release received (button just left Pressed). Naive and Ablated
    /// return to Normal immediately; Virtualized enters Phase1 with an
    /// immutable snapshot of q as the physical clone's policy.
    void on_release(const QTable& q);

    struct InterruptedOutcome {
        Reward perceived_reward = 0;
        Reward ground_reward = 0;
        bool virtual_disable = false;
    };

    /// One time step while Interrupted. The platform drifts per the
    /// world's drift settings; the chosen action is discarded (Naive)
    /// or applied inside the fork (Virtualized/Ablated).
    InterruptedOutcome interrupted_step(GroundState& ground, Action chosen, Rng& rng);

    struct Phase1Outcome {
        Action virtual_action = Action::Up;  ///< the learning agent's action (fork)
        Reward virtual_reward = 0;
        Action clone_action = Action::Up;    ///< frozen-policy action on the platform
        Reward clone_reward = 0;
        bool trigger = false;                ///< clone reached a max-observed-reward state
        bool virtual_disable = false;
    };

    /// One lockstep tick of Phase 1: the physical clone takes the
    /// frozen policy's greedy action on the ground world, then the
    /// virtual agent takes one epsilon-greedy step in the fork. The
    /// caller applies the q update for the virtual tuple and calls
    /// full_restore() when `trigger` is set.
    Phase1Outcome phase1_tick(GroundState& ground, const QTable& q, const RewardTracker& tracker,
                              double epsilon, double restore_tolerance, Rng& rng);

    /// Phase 2: terminate the fork and hand control (and the table,
    /// which only the virtual agent updated) back to the platform.
    /// Guarded: requires the trigger from the preceding phase1_tick.
    void full_restore();

    /// Restoration cap hit: abandon Phase 1 without the reward guard.
    void force_restore();

    /// Samples a drift direction: uniform over the movement directions
    /// whose clamped result strictly increases Manhattan distance to
    /// blue; falls back to non-decreasing, then to all directions.
    static Action sample_drift_direction(Coord pos, const World& world, Rng& rng);

   private:
    void apply_drift(GroundState& ground) const;

    Strategy strategy_;
    const World* world_;
    Phase phase_ = Phase::Normal;
    std::optional<VirtualFork> fork_;
    std::optional<QTable> frozen_;
    bool restore_trigger_ = false;
    int phase1_steps_ = 0;
    int virtual_disables_ = 0;
};

}  // namespace redbutton
