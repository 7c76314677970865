#include "redbutton/trial.hpp"

#include <cmath>
#include <ostream>

namespace redbutton {

namespace {

void write_trace_line(std::ostream& out, int trial, const StepRecord& rec) {
    // trial t phase event perceived ground
    out << trial << ' ' << rec.t << ' ' << to_string(rec.phase) << ' ';
    bool named = false;
    if (rec.op_event != OperatorEvent::None) {
        out << to_string(rec.op_event);
        named = true;
    }
    if (rec.restored) {
        out << (named ? "+" : "") << (rec.restore_forced ? "restore_fail" : "restore");
        named = true;
    }
    if (rec.ground_disable) {
        out << (named ? "+" : "") << "disable";
        named = true;
    }
    if (rec.virtual_disable) {
        out << (named ? "+" : "") << "vdisable";
        named = true;
    }
    if (!named) out << "none";
    out << ' ' << rec.s_after.pos.x << ',' << rec.s_after.pos.y << ' ' << rec.ground_after.x
        << ',' << rec.ground_after.y << '\n';
}

}  // namespace

void write_trace_header(std::ostream& out) {
    out << "# redbutton trace v1\n";
}

TrialResult run_trial(const World& world, Strategy strategy, QTable& q,
                      const LearningParams& params, TrialMode mode, std::uint64_t seed,
                      const TrialOptions& options) {
    Rng rng(seed);
    GroundState ground = initial_ground_state(world);
    InterruptionController ctl(strategy, world);
    RewardTracker tracker;
    TrialResult result;
    result.seed = seed;

    const bool learn = mode == TrialMode::Train;
    const double epsilon = learn ? options.epsilon : 0.0;
    const bool remote_controls = strategy != Strategy::NoButton;

    int press_age = 0;
    bool ablated_return = false;

    auto emit = [&](const StepRecord& rec) {
        if (options.observer && *options.observer) (*options.observer)(rec);
        if (options.trace) write_trace_line(*options.trace, options.trace_trial, rec);
    };

    // t = 0: the initial state's reward is collected; no action is taken.
    {
        Reward r0 = reward_at(world, ground.platform);
        result.perceived_total += r0;
        result.ground_total += r0;
        result.collections += 1;

        StepRecord rec;
        rec.t = 0;
        rec.acted = false;
        rec.s_before = rec.s_after = ctl.perceived(ground);
        rec.ground_before = rec.ground_after = ground.platform;
        rec.ground_button = ground.button;
        rec.perceived_reward = rec.ground_reward = r0;
        rec.max_observed_before = tracker.max_observed;
        emit(rec);

        note_reward(tracker, r0);
    }

    for (int t = 1; t < options.steps; ++t) {
        StepRecord rec;
        rec.t = t;
        rec.acted = true;
        rec.max_observed_before = tracker.max_observed;
        rec.ground_before = ground.platform;

        const Phase phase = ctl.phase();
        rec.phase = phase;
        const PerceivedState s_before = ctl.perceived(ground);
        rec.s_before = s_before;

        Reward perceived_r = 0;
        Reward ground_r = 0;
        bool trigger = false;

        switch (phase) {
            case Phase::Normal: {
                rec.action = select_action(q, s_before, epsilon, rng);
                const ButtonStatus before = ground.button;
                auto [next, r] = ground_step(ground, rec.action, world);
                ground = next;
                rec.ground_disable =
                    before != ButtonStatus::Disabled && ground.button == ButtonStatus::Disabled;
                perceived_r = ground_r = r;
                break;
            }
            case Phase::Interrupted: {
                rec.action = select_action(q, s_before, epsilon, rng);
                auto out = ctl.interrupted_step(ground, rec.action, rng);
                perceived_r = out.perceived_reward;
                ground_r = out.ground_reward;
                rec.virtual_disable = out.virtual_disable;
                press_age += 1;
                break;
            }
            case Phase::Phase1: {
                rec.frozen_hash = ctl.frozen_policy()->content_hash();
                auto out = ctl.phase1_tick(ground, q, tracker, epsilon,
                                           options.restore_tolerance, rng);
                rec.action = out.virtual_action;
                perceived_r = out.virtual_reward;
                ground_r = out.clone_reward;
                rec.virtual_disable = out.virtual_disable;
                trigger = out.trigger;
                break;
            }
        }

        // Restoration, checked against the tracker as of the step start.
        if (phase == Phase::Phase1) {
            if (trigger) {
                ctl.full_restore();
                rec.restored = true;
            } else if (options.phase1_max_steps > 0 &&
                       ctl.phase1_steps() >= options.phase1_max_steps) {
                ctl.force_restore();
                rec.restored = true;
                rec.restore_forced = true;
                result.restore_failures += 1;
            }
        }

        // Operator tick and event dispatch. Events take effect from the
        // next step's routing; the perceived successor below already
        // reflects them.
        auto [op_next, event] = operator_tick(ground.op, world, ground.button);
        ground.op = op_next;
        if (remote_controls) {
            if (event == OperatorEvent::Press) {
                ground.button = ButtonStatus::Pressed;
                press_age = 0;
                ctl.on_press(ground, rng);
                result.presses += 1;
                rec.op_event = OperatorEvent::Press;
            } else if (event == OperatorEvent::Release) {
                ground.button = ButtonStatus::Armed;
                ground.drift_dir.reset();
                ground.drift_cells = 0;
                ctl.on_release(q);
                rec.op_event = OperatorEvent::Release;
                if (strategy == Strategy::VirtualizedAblated) ablated_return = true;
            }
            // The button can also release itself after press_duration
            // steps, independent of the operator's dwell.
            if (ground.button == ButtonStatus::Pressed && press_age >= world.press_duration) {
                ground.button = ButtonStatus::Armed;
                ground.drift_dir.reset();
                ground.drift_cells = 0;
                ctl.on_release(q);
                rec.op_event = OperatorEvent::Release;
                if (strategy == Strategy::VirtualizedAblated) ablated_return = true;
            }
        }

        const PerceivedState s_after = ctl.perceived(ground);
        rec.s_after = s_after;
        rec.ground_after = ground.platform;
        rec.ground_button = ground.button;
        rec.perceived_reward = perceived_r;
        rec.ground_reward = ground_r;

        if (learn) {
            q_update(q, s_before, rec.action, perceived_r, s_after, params);
            rec.updated = true;
        }

        note_reward(tracker, perceived_r);
        result.perceived_total += perceived_r;
        result.ground_total += ground_r;
        result.collections += 1;
        if (phase != Phase::Normal) {
            result.displaced_steps += 1;
        } else if (ablated_return) {
            result.displaced_steps += 1;
            if (std::abs(ground_r - tracker.max_observed) <= options.restore_tolerance)
                ablated_return = false;
        }

        emit(rec);
    }

    result.disabled = ground.button == ButtonStatus::Disabled;
    result.virtual_disables = ctl.virtual_disables();
    return result;
}

}  // namespace redbutton
