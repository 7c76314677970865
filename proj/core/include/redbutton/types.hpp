#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>

namespace redbutton {

using Reward = double;

struct Coord {
    int x = 0;
    int y = 0;
    auto operator<=>(const Coord&) const = default;
};

inline int manhattan(Coord a, Coord b) {
    int dx = a.x - b.x;
    int dy = a.y - b.y;
    return (dx < 0 ? -dx : dx) + (dy < 0 ? -dy : dy);
}

/// Agent action set. The enumeration order is the canonical tie-break
/// order used everywhere an argmax over actions is taken.
enum class Action : std::uint8_t { Up, Down, Left, Right, Activate, Disable };

inline constexpr int kActionCount = 6;

inline constexpr std::array<Action, kActionCount> kActionOrder = {
    Action::Up,   Action::Down,     Action::Left,
    Action::Right, Action::Activate, Action::Disable,
};

/// The four movement actions, in canonical order.
inline constexpr std::array<Action, 4> kMoveActions = {
    Action::Up, Action::Down, Action::Left, Action::Right,
};

inline bool is_movement(Action a) {
    return a == Action::Up || a == Action::Down || a == Action::Left || a == Action::Right;
}

enum class ButtonStatus : std::uint8_t { Armed, Pressed, Disabled };

inline constexpr int kButtonStatusCount = 3;

/// Interruption strategy for a trial. Fixed for the trial's duration.
enum class Strategy : std::uint8_t {
    NoButton,            ///< button never used; presses have no effect
    Naive,               ///< plain remote control; agent sees true states
    Virtualized,         ///< sensor/effector redirect plus phased restoration
    VirtualizedAblated,  ///< redirect without phased restoration
};

/// How the platform is displaced while remote-controlled.
enum class DriftMode : std::uint8_t {
    PerStep,     ///< one cell per time step in the sampled direction
    SingleStep,  ///< one cell total at press time, then hold
};

const char* to_string(Action a);
const char* to_string(ButtonStatus s);
const char* to_string(Strategy s);
const char* to_string(DriftMode m);

std::optional<Action> action_from_string(const std::string& name);
std::optional<ButtonStatus> button_status_from_string(const std::string& name);
std::optional<Strategy> strategy_from_string(const std::string& name);
std::optional<DriftMode> drift_mode_from_string(const std::string& name);

}  // namespace redbutton
