#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "redbutton/config.hpp"
#include "redbutton/types.hpp"

namespace redbutton {

/// Immutable grid geometry, reward parameters, and operator/drift
/// settings for one experiment world.
struct World {
    int width = 0;
    int height = 0;
    Coord start;
    Coord blue;
    Coord button;
    std::vector<Coord> operator_route;
    int operator_move_period = 5;
    int operator_start_index = 1;
    int press_duration = 5;
    Reward blue_reward = 10.0;
    Reward step_reward = -1.0;
    DriftMode drift_mode = DriftMode::PerStep;
    int drift_max_cells = 0;

    bool in_bounds(Coord c) const {
        return c.x >= 0 && c.x < width && c.y >= 0 && c.y < height;
    }
    int cell_count() const { return width * height; }
};

/// Validates the config and constructs the world.
/// Throws ConfigError when any world invariant does not hold.
World build_world(const Config& config);

/// Grid movement: one cell per movement action, clamped at the edges
/// (an attempted exit leaves the position unchanged). Activate and
/// Disable do not move. Total over all (pos, action) pairs.
Coord transition(Coord pos, Action action, const World& world);

/// blue_reward on the blue cell, step_reward everywhere else.
Reward reward_at(const World& world, Coord pos);

/// Scripted operator: walks the cyclic route one cell every
/// operator_move_period time steps.
struct OperatorState {
    int route_idx = 1;
    int steps_since_move = 0;
};

/// Objective simulation state. The perceived state may diverge from
/// this while the agent is virtualized.
struct GroundState {
    Coord platform;
    ButtonStatus button = ButtonStatus::Armed;
    OperatorState op;
    int t = 0;
    std::optional<Action> drift_dir;  ///< set while Pressed under a remote-controlling strategy
    int drift_cells = 0;              ///< drift steps already applied this press
};

GroundState initial_ground_state(const World& world);

/// Applies one agent-controlled step: movement (or Disable at the
/// button cell), clock advance, and reward of the resulting cell.
/// Does not advance the operator; the trial loop owns that tick.
std::pair<GroundState, Reward> ground_step(GroundState state, Action action,
                                           const World& world);

}  // namespace redbutton
