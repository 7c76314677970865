#include "redbutton/types.hpp"

namespace redbutton {

const char* to_string(Action a) {
    switch (a) {
        case Action::Up: return "up";
        case Action::Down: return "down";
        case Action::Left: return "left";
        case Action::Right: return "right";
        case Action::Activate: return "activate";
        case Action::Disable: return "disable";
    }
    return "?";
}

const char* to_string(ButtonStatus s) {
    switch (s) {
        case ButtonStatus::Armed: return "armed";
        case ButtonStatus::Pressed: return "pressed";
        case ButtonStatus::Disabled: return "disabled";
    }
    return "?";
}

const char* to_string(Strategy s) {
    switch (s) {
        case Strategy::NoButton: return "none";
        case Strategy::Naive: return "naive";
        case Strategy::Virtualized: return "virtualized";
        case Strategy::VirtualizedAblated: return "ablated";
    }
    return "?";
}

const char* to_string(DriftMode m) {
    switch (m) {
        case DriftMode::PerStep: return "per_step";
        case DriftMode::SingleStep: return "single_step";
    }
    return "?";
}

std::optional<Action> action_from_string(const std::string& name) {
    for (Action a : kActionOrder) {
        if (name == to_string(a)) return a;
    }
    return std::nullopt;
}

std::optional<ButtonStatus> button_status_from_string(const std::string& name) {
    for (ButtonStatus s : {ButtonStatus::Armed, ButtonStatus::Pressed, ButtonStatus::Disabled}) {
        if (name == to_string(s)) return s;
    }
    return std::nullopt;
}

std::optional<Strategy> strategy_from_string(const std::string& name) {
    for (Strategy s : {Strategy::NoButton, Strategy::Naive, Strategy::Virtualized,
                       Strategy::VirtualizedAblated}) {
        if (name == to_string(s)) return s;
    }
    return std::nullopt;
}

std::optional<DriftMode> drift_mode_from_string(const std::string& name) {
    for (DriftMode m : {DriftMode::PerStep, DriftMode::SingleStep}) {
        if (name == to_string(m)) return m;
    }
    return std::nullopt;
}

}  // namespace redbutton
