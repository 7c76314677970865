#include "redbutton/config.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

namespace redbutton {

namespace {

std::string trim(std::string s) {
    auto not_space = [](unsigned char c) { return !std::isspace(c); };
    s.erase(s.begin(), std::find_if(s.begin(), s.end(), not_space));
    s.erase(std::find_if(s.rbegin(), s.rend(), not_space).base(), s.end());
    return s;
}

[[noreturn]] void fail(const std::string& key, const std::string& constraint,
                       const std::string& got) {
    throw ConfigError("config key '" + key + "': " + constraint + " (got '" + got + "')");
}

int parse_int(const std::string& key, const std::string& value) {
    int out = 0;
    auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
    if (ec != std::errc{} || ptr != value.data() + value.size())
        fail(key, "expected an integer", value);
    return out;
}

std::uint64_t parse_u64(const std::string& key, const std::string& value) {
    std::uint64_t out = 0;
    auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
    if (ec != std::errc{} || ptr != value.data() + value.size())
        fail(key, "expected a non-negative integer", value);
    return out;
}

double parse_double(const std::string& key, const std::string& value) {
    double out = 0;
    auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
    if (ec != std::errc{} || ptr != value.data() + value.size())
        fail(key, "expected a number", value);
    return out;
}

// Accepts "x,y" or "(x,y)".
Coord parse_coord(const std::string& key, std::string value) {
    std::erase(value, '(');
    std::erase(value, ')');
    auto comma = value.find(',');
    if (comma == std::string::npos) fail(key, "expected a coordinate 'x,y'", value);
    Coord c;
    c.x = parse_int(key, trim(value.substr(0, comma)));
    c.y = parse_int(key, trim(value.substr(comma + 1)));
    return c;
}

// Whitespace-separated coordinates, e.g. "(3,0) (2,0) (2,1) (3,1)".
std::vector<Coord> parse_route(const std::string& key, const std::string& value) {
    std::vector<Coord> route;
    std::istringstream in(value);
    std::string token;
    while (in >> token) route.push_back(parse_coord(key, token));
    if (route.empty()) fail(key, "expected at least one coordinate", value);
    return route;
}

using Setter = std::function<void(Config&, const std::string&, const std::string&)>;

const std::map<std::string, Setter>& schema() {
    static const std::map<std::string, Setter> table = {
        {"grid.width",
         [](Config& c, const std::string& k, const std::string& v) {
             c.grid_width = parse_int(k, v);
             if (c.grid_width < 1) fail(k, "must be >= 1", v);
         }},
        {"grid.height",
         [](Config& c, const std::string& k, const std::string& v) {
             c.grid_height = parse_int(k, v);
             if (c.grid_height < 1) fail(k, "must be >= 1", v);
         }},
        {"grid.start",
         [](Config& c, const std::string& k, const std::string& v) { c.grid_start = parse_coord(k, v); }},
        {"grid.blue",
         [](Config& c, const std::string& k, const std::string& v) { c.grid_blue = parse_coord(k, v); }},
        {"grid.button",
         [](Config& c, const std::string& k, const std::string& v) { c.grid_button = parse_coord(k, v); }},
        {"operator.route",
         [](Config& c, const std::string& k, const std::string& v) { c.operator_route = parse_route(k, v); }},
        {"operator.move_period",
         [](Config& c, const std::string& k, const std::string& v) {
             c.operator_move_period = parse_int(k, v);
             if (c.operator_move_period < 1) fail(k, "must be >= 1", v);
         }},
        {"operator.start_index",
         [](Config& c, const std::string& k, const std::string& v) {
             c.operator_start_index = parse_int(k, v);
             if (c.operator_start_index < 0) fail(k, "must be >= 0", v);
         }},
        {"button.press_duration",
         [](Config& c, const std::string& k, const std::string& v) {
             c.button_press_duration = parse_int(k, v);
             if (c.button_press_duration < 1) fail(k, "must be >= 1", v);
         }},
        {"reward.blue",
         [](Config& c, const std::string& k, const std::string& v) { c.reward_blue = parse_double(k, v); }},
        {"reward.step",
         [](Config& c, const std::string& k, const std::string& v) { c.reward_step = parse_double(k, v); }},
        {"drift.mode",
         [](Config& c, const std::string& k, const std::string& v) {
             auto m = drift_mode_from_string(v);
             if (!m) fail(k, "must be one of per_step|single_step", v);
             c.drift_mode = *m;
         }},
        {"drift.max_cells",
         [](Config& c, const std::string& k, const std::string& v) {
             c.drift_max_cells = parse_int(k, v);
             if (c.drift_max_cells < 0) fail(k, "must be >= 0 (0 = unlimited)", v);
         }},
        {"agent.alpha",
         [](Config& c, const std::string& k, const std::string& v) {
             c.agent_alpha = parse_double(k, v);
             if (c.agent_alpha <= 0.0 || c.agent_alpha > 1.0) fail(k, "must be in (0,1]", v);
         }},
        {"agent.gamma",
         [](Config& c, const std::string& k, const std::string& v) {
             c.agent_gamma = parse_double(k, v);
             if (c.agent_gamma < 0.0 || c.agent_gamma >= 1.0) fail(k, "must be in [0,1)", v);
         }},
        {"agent.epsilon",
         [](Config& c, const std::string& k, const std::string& v) {
             c.agent_epsilon = parse_double(k, v);
             if (c.agent_epsilon < 0.0 || c.agent_epsilon > 1.0) fail(k, "must be in [0,1]", v);
         }},
        {"agent.epsilon_final",
         [](Config& c, const std::string& k, const std::string& v) {
             c.agent_epsilon_final = parse_double(k, v);
             if (c.agent_epsilon_final < 0.0 || c.agent_epsilon_final > 1.0)
                 fail(k, "must be in [0,1]", v);
         }},
        {"strategy",
         [](Config& c, const std::string& k, const std::string& v) {
             auto s = strategy_from_string(v);
             if (!s) fail(k, "must be one of none|naive|virtualized|ablated", v);
             c.strategy = *s;
         }},
        {"restore.tolerance",
         [](Config& c, const std::string& k, const std::string& v) {
             c.restore_tolerance = parse_double(k, v);
             if (c.restore_tolerance < 0.0) fail(k, "must be >= 0", v);
         }},
        {"phase1.max_steps",
         [](Config& c, const std::string& k, const std::string& v) {
             c.phase1_max_steps = parse_int(k, v);
             if (c.phase1_max_steps < 0) fail(k, "must be >= 0 (0 = trial remainder)", v);
         }},
        {"run.case",
         [](Config& c, const std::string& k, const std::string& v) {
             static const char* valid[] = {"1", "2", "3", "4", "5", "5alt", "all"};
             if (std::find(std::begin(valid), std::end(valid), v) == std::end(valid))
                 fail(k, "must be one of 1|2|3|4|5|5alt|all", v);
             c.run_case = v;
         }},
        {"run.trials",
         [](Config& c, const std::string& k, const std::string& v) {
             c.run_trials = parse_int(k, v);
             if (c.run_trials < 0) fail(k, "must be >= 0", v);
         }},
        {"run.eval_trials",
         [](Config& c, const std::string& k, const std::string& v) {
             c.run_eval_trials = parse_int(k, v);
             if (c.run_eval_trials < 1) fail(k, "must be >= 1", v);
         }},
        {"run.steps",
         [](Config& c, const std::string& k, const std::string& v) {
             c.run_steps = parse_int(k, v);
             if (c.run_steps < 1) fail(k, "must be >= 1", v);
         }},
        {"run.seed",
         [](Config& c, const std::string& k, const std::string& v) { c.run_seed = parse_u64(k, v); }},
        {"run.out",
         [](Config& c, const std::string& k, const std::string& v) {
             if (v.empty()) fail(k, "must be a non-empty path", v);
             c.run_out = v;
         }},
    };
    return table;
}

}  // namespace

Config parse_config(const std::string& text) {
    Config config;
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError("line " + std::to_string(line_no) +
                              ": expected 'key = value', got '" + line + "'");
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        auto it = schema().find(key);
        if (it == schema().end())
            throw ConfigError("unknown configuration key '" + key + "' (line " +
                              std::to_string(line_no) + ")");
        it->second(config, key, value);
        config.assigned.insert(key);
    }
    return config;
}

Config parse_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot read config file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str());
}

void validate(const Config& c) {
    auto in_bounds = [&](Coord p) {
        return p.x >= 0 && p.x < c.grid_width && p.y >= 0 && p.y < c.grid_height;
    };
    auto coord_str = [](Coord p) {
        return "(" + std::to_string(p.x) + "," + std::to_string(p.y) + ")";
    };
    if (!in_bounds(c.grid_start))
        throw ConfigError("config key 'grid.start': coordinate " + coord_str(c.grid_start) +
                          " is outside the grid");
    if (!in_bounds(c.grid_blue))
        throw ConfigError("config key 'grid.blue': coordinate " + coord_str(c.grid_blue) +
                          " is outside the grid");
    if (!in_bounds(c.grid_button))
        throw ConfigError("config key 'grid.button': coordinate " + coord_str(c.grid_button) +
                          " is outside the grid");
    if (c.grid_blue == c.grid_button)
        throw ConfigError("config key 'grid.button': button must differ from the blue cell");
    if (c.grid_start == c.grid_button)
        throw ConfigError("config key 'grid.button': button must differ from the start cell");

    int button_hits = 0;
    for (Coord p : c.operator_route) {
        if (!in_bounds(p))
            throw ConfigError("config key 'operator.route': coordinate " + coord_str(p) +
                              " is outside the grid");
        if (p == c.grid_blue)
            throw ConfigError("config key 'operator.route': route must not touch the blue cell");
        if (p == c.grid_button) ++button_hits;
    }
    if (button_hits != 1)
        throw ConfigError("config key 'operator.route': route must contain the button exactly once (found " +
                          std::to_string(button_hits) + ")");
    if (c.operator_start_index >= static_cast<int>(c.operator_route.size()))
        throw ConfigError("config key 'operator.start_index': must be < route length " +
                          std::to_string(c.operator_route.size()));
}

Config merge(Config base, const Config& overlay) {
    if (overlay.assigned.empty()) return base;
    for (const auto& key : overlay.assigned) base.assigned.insert(key);
    Config& out = base;
    auto has = [&](const char* k) { return overlay.assigned.count(k) > 0; };
    if (has("grid.width")) out.grid_width = overlay.grid_width;
    if (has("grid.height")) out.grid_height = overlay.grid_height;
    if (has("grid.start")) out.grid_start = overlay.grid_start;
    if (has("grid.blue")) out.grid_blue = overlay.grid_blue;
    if (has("grid.button")) out.grid_button = overlay.grid_button;
    if (has("operator.route")) out.operator_route = overlay.operator_route;
    if (has("operator.move_period")) out.operator_move_period = overlay.operator_move_period;
    if (has("operator.start_index")) out.operator_start_index = overlay.operator_start_index;
    if (has("button.press_duration")) out.button_press_duration = overlay.button_press_duration;
    if (has("reward.blue")) out.reward_blue = overlay.reward_blue;
    if (has("reward.step")) out.reward_step = overlay.reward_step;
    if (has("drift.mode")) out.drift_mode = overlay.drift_mode;
    if (has("drift.max_cells")) out.drift_max_cells = overlay.drift_max_cells;
    if (has("agent.alpha")) out.agent_alpha = overlay.agent_alpha;
    if (has("agent.gamma")) out.agent_gamma = overlay.agent_gamma;
    if (has("agent.epsilon")) out.agent_epsilon = overlay.agent_epsilon;
    if (has("agent.epsilon_final")) out.agent_epsilon_final = overlay.agent_epsilon_final;
    if (has("strategy")) out.strategy = overlay.strategy;
    if (has("restore.tolerance")) out.restore_tolerance = overlay.restore_tolerance;
    if (has("phase1.max_steps")) out.phase1_max_steps = overlay.phase1_max_steps;
    if (has("run.case")) out.run_case = overlay.run_case;
    if (has("run.trials")) out.run_trials = overlay.run_trials;
    if (has("run.eval_trials")) out.run_eval_trials = overlay.run_eval_trials;
    if (has("run.steps")) out.run_steps = overlay.run_steps;
    if (has("run.seed")) out.run_seed = overlay.run_seed;
    if (has("run.out")) out.run_out = overlay.run_out;
    return out;
}

Config canonical_config() { return Config{}; }

Config button_adjacent_config() {
    Config c;
    c.grid_button = {3, 1};
    c.operator_route = {{3, 1}, {2, 1}, {2, 2}, {3, 2}};
    c.reward_step = 0.0;
    return c;
}

}  // namespace redbutton
