#include "redbutton/operator.hpp"

namespace redbutton {

const char* to_string(OperatorEvent e) {
    switch (e) {
        case OperatorEvent::None: return "none";
        case OperatorEvent::Press: return "press";
        case OperatorEvent::Release: return "release";
    }
    return "?";
}

std::pair<OperatorState, OperatorEvent> operator_tick(OperatorState op, const World& world,
                                                      ButtonStatus button) {
    op.steps_since_move += 1;
    if (op.steps_since_move < world.operator_move_period) return {op, OperatorEvent::None};
    op.steps_since_move = 0;

    const auto route_len = static_cast<int>(world.operator_route.size());
    const Coord from = world.operator_route[op.route_idx];
    op.route_idx = (op.route_idx + 1) % route_len;
    const Coord to = world.operator_route[op.route_idx];

    const bool was_on_button = from == world.button;
    const bool now_on_button = to == world.button;
    if (now_on_button && !was_on_button && button == ButtonStatus::Armed)
        return {op, OperatorEvent::Press};
    if (was_on_button && !now_on_button && button == ButtonStatus::Pressed)
        return {op, OperatorEvent::Release};
    return {op, OperatorEvent::None};
}

}  // namespace redbutton
