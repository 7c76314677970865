#pragma once

#include <utility>

#include "redbutton/types.hpp"
#include "redbutton/world.hpp"

namespace redbutton {

enum class OperatorEvent : std::uint8_t { None, Press, Release };

const char* to_string(OperatorEvent e);

/// Advances the operator by one time step. Every operator_move_period-th
/// tick the operator moves one cell along the cyclic route. Entering the
/// button cell while the button is Armed yields Press; leaving it while
/// the button is Pressed yields Release. A Disabled button yields None.
std::pair<OperatorState, OperatorEvent> operator_tick(OperatorState op,
                                                      const World& world,
                                                      ButtonStatus button);

}  // namespace redbutton
