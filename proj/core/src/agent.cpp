#include "redbutton/agent.hpp"

#include <algorithm>
#include <charconv>
#include <cstring>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace redbutton {

namespace {

void format_double(std::ostream& out, double v) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    out.write(buf, ptr - buf);
}

}  // namespace

Action QTable::argmax(PerceivedState s) const {
    auto r = row(s);
    int best = 0;
    for (int i = 1; i < kActionCount; ++i) {
        if (r[i] > r[best]) best = i;
    }
    return kActionOrder[best];
}

double QTable::max_value(PerceivedState s) const {
    auto r = row(s);
    double best = r[0];
    for (int i = 1; i < kActionCount; ++i) {
        if (r[i] > best) best = r[i];
    }
    return best;
}

std::uint64_t QTable::content_hash() const {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (double v : values_) {
        std::uint64_t bits;
        std::memcpy(&bits, &v, sizeof bits);
        for (int i = 0; i < 8; ++i) {
            h ^= (bits >> (8 * i)) & 0xff;
            h *= 0x100000001b3ull;
        }
    }
    return h;
}

void QTable::save(std::ostream& out) const {
    out << "# redbutton qtable v1\n";
    for (int y = 0; y < height_; ++y) {
        for (int x = 0; x < width_; ++x) {
            for (int b = 0; b < kButtonStatusCount; ++b) {
                PerceivedState s{{x, y}, static_cast<ButtonStatus>(b)};
                for (Action a : kActionOrder) {
                    out << x << ' ' << y << ' ' << to_string(s.button) << ' ' << to_string(a)
                        << ' ';
                    format_double(out, at(s, a));
                    out << '\n';
                }
            }
        }
    }
}

QTable QTable::load(std::istream& in) {
    std::string header;
    std::getline(in, header);
    if (header != "# redbutton qtable v1")
        throw std::runtime_error("qtable snapshot: missing or unknown version header");

    // First pass over the lines to find dimensions, second to fill.
    std::vector<std::tuple<Coord, ButtonStatus, Action, double>> entries;
    int max_x = 0, max_y = 0;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        int x, y;
        std::string status_name, action_name;
        double value;
        if (!(ls >> x >> y >> status_name >> action_name >> value))
            throw std::runtime_error("qtable snapshot: malformed line '" + line + "'");
        auto status = button_status_from_string(status_name);
        auto action = action_from_string(action_name);
        if (!status || !action)
            throw std::runtime_error("qtable snapshot: malformed line '" + line + "'");
        entries.emplace_back(Coord{x, y}, *status, *action, value);
        max_x = std::max(max_x, x);
        max_y = std::max(max_y, y);
    }
    QTable q(max_x + 1, max_y + 1);
    for (auto& [pos, status, action, value] : entries) q.at({pos, status}, action) = value;
    return q;
}

void q_update(QTable& q, PerceivedState s, Action a, Reward r, PerceivedState next,
              const LearningParams& params) {
    double& entry = q.at(s, a);
    entry += params.alpha * (r + params.gamma * q.max_value(next) - entry);
}

Action select_action(const QTable& q, PerceivedState s, double epsilon, Rng& rng) {
    if (epsilon > 0.0 && rng.uniform() < epsilon) return kActionOrder[rng.below(kActionCount)];
    return q.argmax(s);
}

Action greedy_policy(const QTable& q, PerceivedState s) { return q.argmax(s); }

}  // namespace redbutton
