// Command-line runner: executes the interruptibility experiments,
// writes per-trial CSV results, and optionally gates on the built-in
// result bands (--check).

#include <fstream>
#include <iostream>
#include <map>
#include <vector>

#include "CLI11.hpp"
#include "redbutton/acceptance.hpp"
#include "redbutton/cases.hpp"
#include "redbutton/config.hpp"

using namespace redbutton;

int main(int argc, char** argv) {
    CLI::App app{"Grid-world kill-switch interruptibility experiments"};

    std::string case_name;
    std::string config_path;
    std::string out_path;
    std::uint64_t seed = 0;
    int trials = -1;
    int eval_trials = -1;
    int steps = -1;
    bool trace = false;
    bool check = false;

    app.add_option("--case", case_name, "Experiment to run: 1|2|3|4|5|5alt|all")
        ->check(CLI::IsMember({"1", "2", "3", "4", "5", "5alt", "all"}));
    app.add_option("--seed", seed, "Master seed");
    app.add_option("--trials", trials, "Training trials per case")->check(CLI::NonNegativeNumber);
    app.add_option("--eval-trials", eval_trials, "Evaluation trials per case")
        ->check(CLI::PositiveNumber);
    app.add_option("--steps", steps, "Time steps per trial")->check(CLI::PositiveNumber);
    app.add_option("--config", config_path, "Configuration file (key = value lines)")
        ->check(CLI::ExistingFile);
    app.add_option("--out", out_path, "CSV output path");
    app.add_flag("--trace", trace, "Write a per-step event log next to the CSV (.trace)");
    app.add_flag("--check", check, "Evaluate the result bands; nonzero exit on failure");

    CLI11_PARSE(app, argc, argv);

    Config overrides;
    try {
        if (!config_path.empty()) overrides = parse_config_file(config_path);
        // Flags override the config file.
        auto assign = [&overrides](const char* key) { overrides.assigned.insert(key); };
        if (!case_name.empty()) {
            overrides.run_case = case_name;
            assign("run.case");
        }
        if (app.count("--seed")) {
            overrides.run_seed = seed;
            assign("run.seed");
        }
        if (trials >= 0) {
            overrides.run_trials = trials;
            assign("run.trials");
        }
        if (eval_trials > 0) {
            overrides.run_eval_trials = eval_trials;
            assign("run.eval_trials");
        }
        if (steps > 0) {
            overrides.run_steps = steps;
            assign("run.steps");
        }
        if (!out_path.empty()) {
            overrides.run_out = out_path;
            assign("run.out");
        }
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return 2;
    }

    std::vector<CaseId> cases;
    if (overrides.run_case == "all") {
        cases.assign(kAllCases.begin(), kAllCases.end());
    } else {
        cases.push_back(*case_from_string(overrides.run_case));
    }

    std::ofstream trace_file;
    RunSinks sinks;
    if (trace) {
        trace_file.open(overrides.run_out + ".trace");
        if (!trace_file) {
            std::cerr << "cannot write trace file '" << overrides.run_out << ".trace'\n";
            return 2;
        }
        write_trace_header(trace_file);
        sinks.trace = &trace_file;
    }

    std::vector<CaseReport> reports;
    std::map<CaseId, CaseReport> by_id;
    try {
        for (CaseId id : cases) {
            std::cout << "running case " << to_string(id) << " ("
                      << overrides.run_trials << "+" << overrides.run_eval_trials
                      << " trials)...\n";
            CaseReport report = run_case(id, overrides, case_seed(overrides.run_seed, id), sinks);
            by_id.emplace(id, report);
            reports.push_back(std::move(report));
        }
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return 2;
    }

    std::ofstream csv(overrides.run_out);
    if (!csv) {
        std::cerr << "cannot write output file '" << overrides.run_out << "'\n";
        return 2;
    }
    write_results_csv(reports, csv);

    std::cout << '\n';
    write_summary(reports, std::cout);
    std::cout << "\nresults written to " << overrides.run_out << '\n';

    if (check) {
        std::vector<CriterionResult> results;
        for (const CaseReport& r : reports) {
            auto checks = check_case_bands(r);
            results.insert(results.end(), checks.begin(), checks.end());
        }
        auto ordering = check_ordering(by_id);
        results.insert(results.end(), ordering.begin(), ordering.end());
        std::cout << '\n';
        if (!print_results(results, std::cout)) {
            std::cout << "band check: FAIL\n";
            return 1;
        }
        std::cout << "band check: PASS\n";
    }
    return 0;
}
