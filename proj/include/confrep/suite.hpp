#pragma once

#include "confrep/report.hpp"

#include <string>
#include <vector>

#include "json.hpp"

namespace confrep {

struct CriterionResult {
    int id = 0;
    std::string title;
    Report report;
    double seconds = 0;
    bool pass() const { return report.all_pass(); }
};

struct SuiteOptions {
    /// Flip one sign in the closed-form image of J_1 to check that the harness notices.
    bool inject_fault = false;
    /// Restrict to these criteria (1-based); empty means all.
    std::vector<int> only;
};

/// Runs the acceptance battery with fixed parameters.
std::vector<CriterionResult> run_suite(const SuiteOptions& opts = {});

/// Number of criteria in the battery.
int suite_size();

/// One line per criterion plus the failing identities; includes timings.
std::string suite_text(const std::vector<CriterionResult>& results);
/// Deterministic document (no timings).
nlohmann::json suite_json(const std::vector<CriterionResult>& results);

}  // namespace confrep
