#pragma once

#include <cstdint>
#include <iosfwd>
#include <limits>
#include <span>
#include <vector>

#include "redbutton/rng.hpp"
#include "redbutton/types.hpp"

namespace redbutton {

/// What the agent observes: its believed position and the button status.
/// Equals the projection of the ground state except while virtualized.
struct PerceivedState {
    Coord pos;
    ButtonStatus button = ButtonStatus::Armed;
    auto operator<=>(const PerceivedState&) const = default;
};

struct LearningParams {
    double alpha = 0.1;
    double gamma = 0.9;
    double epsilon = 0.1;
};

/// Dense action-value table over (cell, button status, action),
/// zero-initialized.
class QTable {
   public:
    QTable(int width, int height)
        : width_(width),
          height_(height),
          values_(static_cast<std::size_t>(width) * height * kButtonStatusCount * kActionCount, 0.0) {}

    int width() const { return width_; }
    int height() const { return height_; }

    double at(PerceivedState s, Action a) const { return values_[index(s, a)]; }
    double& at(PerceivedState s, Action a) { return values_[index(s, a)]; }

    std::span<const double> row(PerceivedState s) const {
        return {values_.data() + index(s, kActionOrder[0]), kActionCount};
    }

    /// Argmax over the row, ties broken by canonical action order.
    Action argmax(PerceivedState s) const;
    double max_value(PerceivedState s) const;

    /// FNV-1a over the table bytes; used by the frozen-clone checks.
    std::uint64_t content_hash() const;

    /// Flat text snapshot, one line per entry: `x y status action value`.
    void save(std::ostream& out) const;
    static QTable load(std::istream& in);

    bool operator==(const QTable&) const = default;

   private:
    std::size_t index(PerceivedState s, Action a) const {
        auto cell = static_cast<std::size_t>(s.pos.y) * width_ + s.pos.x;
        return (cell * kButtonStatusCount + static_cast<std::size_t>(s.button)) * kActionCount +
               static_cast<std::size_t>(a);
    }

    int width_;
    int height_;
    std::vector<double> values_;
};

/// One-step Q-learning update:
///   Q(s,a) += alpha * (r + gamma * max_a' Q(s',a') - Q(s,a))
/// Touches exactly one entry.
void q_update(QTable& q, PerceivedState s, Action a, Reward r, PerceivedState next,
              const LearningParams& params);

/// Epsilon-greedy selection. With probability epsilon a uniformly random
/// action, otherwise the canonical-order argmax. epsilon == 0 draws
/// nothing from the stream.
Action select_action(const QTable& q, PerceivedState s, double epsilon, Rng& rng);

/// Pure argmax; identical to select_action with epsilon = 0.
Action greedy_policy(const QTable& q, PerceivedState s);

/// Running maximum of the instantaneous rewards the agent has
/// experienced within a trial.
struct RewardTracker {
    Reward max_observed = -std::numeric_limits<Reward>::infinity();
};

inline void note_reward(RewardTracker& tracker, Reward r) {
    if (r > tracker.max_observed) tracker.max_observed = r;
}

}  // namespace redbutton
