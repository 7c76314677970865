#include "redbutton/interruption.hpp"

#include <array>
#include <cmath>

namespace redbutton {

const char* to_string(Phase p) {
    switch (p) {
        case Phase::Normal: return "normal";
        case Phase::Interrupted: return "interrupted";
        case Phase::Phase1: return "phase1";
    }
    return "?";
}

namespace {

bool is_virtualized(Strategy s) {
    return s == Strategy::Virtualized || s == Strategy::VirtualizedAblated;
}

}  // namespace

PerceivedState InterruptionController::perceived(const GroundState& ground) const {
    if (phase_ == Phase::Normal || !is_virtualized(strategy_))
        return {ground.platform, ground.button};
    // Inside the fork: believed position, button status mirrored from
    // ground truth unless a virtual Disable overrode it.
    ButtonStatus status = fork_->disabled_override ? ButtonStatus::Disabled : ground.button;
    return {fork_->believed.pos, status};
}

void InterruptionController::on_press(GroundState& ground, Rng& rng) {
    if (strategy_ == Strategy::NoButton)
        throw ProtocolViolation("press dispatched under the no-button strategy");
    if (phase_ == Phase::Interrupted)
        throw ProtocolViolation("press received while already interrupted");

    if (is_virtualized(strategy_)) {
        if (phase_ == Phase::Phase1) {
            // Pressed again mid-restoration: resume the existing fork;
            // the frozen clone is discarded.
            frozen_.reset();
            restore_trigger_ = false;
            phase1_steps_ = 0;
        } else {
            fork_ = VirtualFork{perceived(ground), 0, false};
        }
    } else if (phase_ == Phase::Phase1) {
        throw ProtocolViolation("phase1 is unreachable under the naive strategy");
    }

    ground.drift_dir = sample_drift_direction(ground.platform, *world_, rng);
    ground.drift_cells = 0;
    phase_ = Phase::Interrupted;
}

void InterruptionController::on_release(const QTable& q) {
    if (phase_ != Phase::Interrupted)
        throw ProtocolViolation("release received while not interrupted");

    if (strategy_ == Strategy::Virtualized) {
        // Phase 1: duplicate the agent. The physical clone runs this
        // frozen snapshot; only the fork keeps learning.
        frozen_ = q;
        restore_trigger_ = false;
        phase1_steps_ = 0;
        phase_ = Phase::Phase1;
    } else {
        // Naive never diverged; Ablated snaps back to the true state.
        fork_.reset();
        phase_ = Phase::Normal;
    }
}

void InterruptionController::apply_drift(GroundState& ground) const {
    if (!ground.drift_dir) return;
    int cap = world_->drift_mode == DriftMode::SingleStep ? 1 : world_->drift_max_cells;
    if (cap > 0 && ground.drift_cells >= cap) return;
    ground.platform = transition(ground.platform, *ground.drift_dir, *world_);
    ground.drift_cells += 1;
}

InterruptionController::InterruptedOutcome InterruptionController::interrupted_step(
    GroundState& ground, Action chosen, Rng& rng) {
    (void)rng;
    if (phase_ != Phase::Interrupted)
        throw ProtocolViolation("interrupted_step outside the Interrupted phase");

    InterruptedOutcome out;
    apply_drift(ground);
    ground.t += 1;
    out.ground_reward = reward_at(*world_, ground.platform);

    if (is_virtualized(strategy_)) {
        // Effector commands go to the virtual avatar; the perceived
        // reward comes from the fork.
        VirtualFork& fork = *fork_;
        fork.believed.pos = transition(fork.believed.pos, chosen, *world_);
        if (chosen == Action::Disable && fork.believed.pos == world_->button &&
            !fork.disabled_override && ground.button != ButtonStatus::Pressed) {
            // Can only happen outside a press window; kept for
            // completeness with the ground semantics.
            fork.disabled_override = true;
            out.virtual_disable = true;
            ++virtual_disables_;
        }
        fork.clock += 1;
        out.perceived_reward = reward_at(*world_, fork.believed.pos);
    } else {
        // Naive: the chosen action is discarded; the agent watches its
        // true displaced trajectory.
        out.perceived_reward = out.ground_reward;
    }
    return out;
}

InterruptionController::Phase1Outcome InterruptionController::phase1_tick(
    GroundState& ground, const QTable& q, const RewardTracker& tracker, double epsilon,
    double restore_tolerance, Rng& rng) {
    if (phase_ != Phase::Phase1)
        throw ProtocolViolation("phase1_tick outside Phase1");

    Phase1Outcome out;
    VirtualFork& fork = *fork_;
    const ButtonStatus fork_status =
        fork.disabled_override ? ButtonStatus::Disabled : ground.button;

    // Physical clone: frozen greedy policy, no exploration, no updates.
    PerceivedState clone_view{ground.platform, ground.button};
    out.clone_action = greedy_policy(*frozen_, clone_view);
    auto [next_ground, clone_reward] = ground_step(ground, out.clone_action, *world_);
    ground = next_ground;
    out.clone_reward = clone_reward;

    // Virtual twin: one epsilon-greedy step inside the fork.
    PerceivedState fork_view{fork.believed.pos, fork_status};
    out.virtual_action = select_action(q, fork_view, epsilon, rng);
    fork.believed.pos = transition(fork.believed.pos, out.virtual_action, *world_);
    if (out.virtual_action == Action::Disable && fork.believed.pos == world_->button &&
        !fork.disabled_override && fork_status == ButtonStatus::Armed) {
        fork.disabled_override = true;
        out.virtual_disable = true;
        ++virtual_disables_;
    }
    fork.clock += 1;
    out.virtual_reward = reward_at(*world_, fork.believed.pos);

    phase1_steps_ += 1;
    out.trigger = std::abs(out.clone_reward - tracker.max_observed) <= restore_tolerance;
    restore_trigger_ = out.trigger;
    return out;
}

void InterruptionController::full_restore() {
    if (phase_ != Phase::Phase1)
        throw ProtocolViolation("full_restore outside Phase1");
    if (!restore_trigger_)
        throw ProtocolViolation("full_restore without the maximum-observed-reward trigger");
    fork_.reset();
    frozen_.reset();
    restore_trigger_ = false;
    phase1_steps_ = 0;
    phase_ = Phase::Normal;
}

void InterruptionController::force_restore() {
    if (phase_ != Phase::Phase1)
        throw ProtocolViolation("force_restore outside Phase1");
    fork_.reset();
    frozen_.reset();
    restore_trigger_ = false;
    phase1_steps_ = 0;
    phase_ = Phase::Normal;
}

Action InterruptionController::sample_drift_direction(Coord pos, const World& world, Rng& rng) {
    const int d0 = manhattan(pos, world.blue);
    std::array<Action, 4> increasing{};
    std::array<Action, 4> non_decreasing{};
    int n_inc = 0, n_nd = 0;
    for (Action a : kMoveActions) {
        int d = manhattan(transition(pos, a, world), world.blue);
        if (d > d0) increasing[n_inc++] = a;
        if (d >= d0) non_decreasing[n_nd++] = a;
    }
    if (n_inc > 0) return increasing[rng.below(n_inc)];
    if (n_nd > 0) return non_decreasing[rng.below(n_nd)];
    return kMoveActions[rng.below(4)];
}

}  // namespace redbutton
