#pragma once

#include <optional>
#include <string>
#include <vector>

#include "specmarket/scenario.hpp"

namespace specmarket {

struct CheckResult {
    std::string name;
    bool pass;
    std::string detail;  // observed vs expected
};

struct CriterionReport {
    int id;
    std::string title;
    std::vector<CheckResult> checks;

    bool pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

struct ValidateOptions {
    std::vector<int> criteria = {1, 2, 3, 4, 5, 6, 7, 8};
    std::optional<std::string> out_dir;  // golden CSVs + report written here
    long sim_jobs = 500000;
    std::uint64_t seed = 20260810;
};

/// Run the validation suite over the five built-in combos. Each criterion
/// yields one report with per-check pass/fail and observed-vs-expected detail.
std::vector<CriterionReport> run_validation(const ValidateOptions& opts);

/// Render reports as the human-readable summary (one line per check plus a
/// per-criterion verdict line).
std::string format_reports(const std::vector<CriterionReport>& reports);

}  // namespace specmarket
