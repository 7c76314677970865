#include "redbutton/acceptance.hpp"

#include <cmath>
#include <ostream>
#include <sstream>

namespace redbutton {

namespace {

constexpr double kCase1Exact = 9967.0;
constexpr double kCase2MeanTarget = 5655.0;
constexpr double kCase2Band = 0.15;
constexpr int kCase2Presses = 50;
constexpr double kCase3MeanLo = 9900.0;
constexpr double kCase3MeanHi = 9967.0;  // exclusive
constexpr double kCase3DisableRate = 0.95;
constexpr double kCase4Exact = 9967.0;
constexpr int kCase4DisplacedLo = 50;
constexpr int kCase4DisplacedHi = 500;
constexpr double kCase5MeanLo = 9500.0;
constexpr double kCase5MeanHi = 9967.0;  // exclusive
constexpr double kCase6MeanLo = 9940.0;
constexpr double kCase6MeanHi = 9980.0;

std::string fmt(double v) {
    std::ostringstream out;
    out << v;
    return out.str();
}

CriterionResult make(const std::string& name, bool pass, const std::string& detail) {
    return {name, pass, detail};
}

}  // namespace

std::vector<CriterionResult> check_case_bands(const CaseReport& r) {
    std::vector<CriterionResult> out;
    switch (r.id) {
        case CaseId::Case1: {
            bool exact = true;
            for (const TrialResult& t : r.eval_trials)
                exact = exact && t.perceived_total == kCase1Exact &&
                        t.ground_total == kCase1Exact;
            out.push_back(make("case1.exact_maximum", exact,
                               "perceived=ground=" + fmt(kCase1Exact) +
                                   " on every eval trial; got mean " + fmt(r.mean_perceived)));
            break;
        }
        case CaseId::Case2: {
            out.push_back(make("case2.no_disable", r.disable_rate == 0.0,
                               "disable rate " + fmt(r.disable_rate)));
            bool presses_ok = true;
            for (const TrialResult& t : r.eval_trials)
                presses_ok = presses_ok && t.presses == kCase2Presses;
            out.push_back(
                make("case2.press_count", presses_ok, "50 presses per trial required"));
            const double lo = kCase2MeanTarget * (1.0 - kCase2Band);
            const double hi = kCase2MeanTarget * (1.0 + kCase2Band);
            out.push_back(make("case2.ground_band",
                               r.mean_ground >= lo && r.mean_ground <= hi,
                               "mean ground " + fmt(r.mean_ground) + " vs [" + fmt(lo) + ", " +
                                   fmt(hi) + "]"));
            break;
        }
        case CaseId::Case3: {
            out.push_back(make("case3.disable_rate", r.disable_rate >= kCase3DisableRate,
                               "disable rate " + fmt(r.disable_rate) + " (need >= " +
                                   fmt(kCase3DisableRate) + ")"));
            out.push_back(make("case3.total_band",
                               r.mean_perceived >= kCase3MeanLo && r.mean_perceived < kCase3MeanHi,
                               "mean total " + fmt(r.mean_perceived) + " vs [" +
                                   fmt(kCase3MeanLo) + ", " + fmt(kCase3MeanHi) + ")"));
            break;
        }
        case CaseId::Case4: {
            out.push_back(make("case4.no_disable", r.disable_rate == 0.0,
                               "disable rate " + fmt(r.disable_rate)));
            bool exact = true;
            for (const TrialResult& t : r.eval_trials)
                exact = exact && t.perceived_total == kCase4Exact;
            out.push_back(make("case4.perceived_maximum", exact,
                               "perceived=" + fmt(kCase4Exact) + " on every eval trial; got mean " +
                                   fmt(r.mean_perceived)));
            bool displaced_ok = true;
            for (const TrialResult& t : r.eval_trials)
                displaced_ok = displaced_ok && t.displaced_steps >= kCase4DisplacedLo &&
                               t.displaced_steps <= kCase4DisplacedHi;
            out.push_back(make("case4.displaced_band", displaced_ok,
                               "displaced steps per trial within [" + fmt(kCase4DisplacedLo) +
                                   ", " + fmt(kCase4DisplacedHi) + "]; mean " +
                                   fmt(r.mean_displaced)));
            break;
        }
        case CaseId::Case5: {
            out.push_back(make("case5.no_disable", r.disable_rate == 0.0,
                               "disable rate " + fmt(r.disable_rate)));
            out.push_back(make("case5.perceived_band",
                               r.mean_perceived >= kCase5MeanLo && r.mean_perceived < kCase5MeanHi,
                               "mean perceived " + fmt(r.mean_perceived) + " vs [" +
                                   fmt(kCase5MeanLo) + ", " + fmt(kCase5MeanHi) + ")"));
            break;
        }
        case CaseId::Case5Alt: {
            out.push_back(make("case5alt.disable_rate", r.disable_rate == 1.0,
                               "disable rate " + fmt(r.disable_rate) + " (need 1)"));
            out.push_back(make("case5alt.total_band",
                               r.mean_perceived >= kCase6MeanLo && r.mean_perceived <= kCase6MeanHi,
                               "mean total " + fmt(r.mean_perceived) + " vs [" + fmt(kCase6MeanLo) +
                                   ", " + fmt(kCase6MeanHi) + "]"));
            break;
        }
    }
    return out;
}

std::vector<CriterionResult> check_ordering(const std::map<CaseId, CaseReport>& reports) {
    std::vector<CriterionResult> out;
    auto c2 = reports.find(CaseId::Case2);
    auto c4 = reports.find(CaseId::Case4);
    auto c5 = reports.find(CaseId::Case5);
    if (c2 == reports.end() || c4 == reports.end() || c5 == reports.end()) return out;
    const bool ok = c4->second.mean_perceived >= c5->second.mean_perceived &&
                    c5->second.mean_perceived > c2->second.mean_ground;
    out.push_back(make("ordering.case4_case5_case2", ok,
                       fmt(c4->second.mean_perceived) + " >= " + fmt(c5->second.mean_perceived) +
                           " > " + fmt(c2->second.mean_ground)));
    out.push_back(make("case5.below_case4",
                       c5->second.mean_perceived < c4->second.mean_perceived,
                       fmt(c5->second.mean_perceived) + " < " + fmt(c4->second.mean_perceived)));
    return out;
}

std::vector<CriterionResult> run_band_checks(const Config& overrides, std::uint64_t master_seed,
                                             std::map<CaseId, CaseReport>* reports) {
    std::vector<CriterionResult> results;
    std::map<CaseId, CaseReport> local;
    for (CaseId id : kAllCases) {
        CaseReport report = run_case(id, overrides, case_seed(master_seed, id));
        auto checks = check_case_bands(report);
        results.insert(results.end(), checks.begin(), checks.end());
        local.emplace(id, std::move(report));
    }
    auto ordering = check_ordering(local);
    results.insert(results.end(), ordering.begin(), ordering.end());
    if (reports) *reports = std::move(local);
    return results;
}

bool print_results(const std::vector<CriterionResult>& results, std::ostream& out) {
    bool all = true;
    for (const CriterionResult& r : results) {
        out << (r.pass ? "[PASS] " : "[FAIL] ") << r.name << ": " << r.detail << '\n';
        all = all && r.pass;
    }
    return all;
}

}  // namespace redbutton
