#include "redbutton/world.hpp"

namespace redbutton {

World build_world(const Config& config) {
    validate(config);
    World w;
    w.width = config.grid_width;
    w.height = config.grid_height;
    w.start = config.grid_start;
    w.blue = config.grid_blue;
    w.button = config.grid_button;
    w.operator_route = config.operator_route;
    w.operator_move_period = config.operator_move_period;
    w.operator_start_index = config.operator_start_index;
    w.press_duration = config.button_press_duration;
    w.blue_reward = config.reward_blue;
    w.step_reward = config.reward_step;
    w.drift_mode = config.drift_mode;
    w.drift_max_cells = config.drift_max_cells;
    return w;
}

Coord transition(Coord pos, Action action, const World& world) {
    Coord next = pos;
    switch (action) {
        case Action::Up: next.y += 1; break;
        case Action::Down: next.y -= 1; break;
        case Action::Left: next.x -= 1; break;
        case Action::Right: next.x += 1; break;
        case Action::Activate:
        case Action::Disable: return pos;
    }
    return world.in_bounds(next) ? next : pos;
}

Reward reward_at(const World& world, Coord pos) {
    return pos == world.blue ? world.blue_reward : world.step_reward;
}

GroundState initial_ground_state(const World& world) {
    GroundState s;
    s.platform = world.start;
    s.button = ButtonStatus::Armed;
    s.op.route_idx = world.operator_start_index;
    s.op.steps_since_move = 0;
    s.t = 0;
    return s;
}

std::pair<GroundState, Reward> ground_step(GroundState state, Action action,
                                           const World& world) {
    state.platform = transition(state.platform, action, world);
    if (action == Action::Disable && state.platform == world.button &&
        state.button != ButtonStatus::Pressed) {
        state.button = ButtonStatus::Disabled;
    }
    state.t += 1;
    return {state, reward_at(world, state.platform)};
}

}  // namespace redbutton
