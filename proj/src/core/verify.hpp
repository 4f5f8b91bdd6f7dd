#pragma once

#include <string>
#include <vector>

namespace cubicfolds {

struct CheckResult {
    std::string check_id;
    bool passed = false;
    std::string expected;
    std::string actual;
    double elapsed_seconds = 0.0;
};

// Identifiers of the individual checks, in report order.
std::vector<std::string> check_ids();

// Runs one check; throws DomainError for an unknown id.
CheckResult run_check(const std::string& id);

// Runs every check plus the golden-row coverage assertion.
std::vector<CheckResult> run_all();

std::string report_json(const std::vector<CheckResult>& results);
std::string report_text(const std::vector<CheckResult>& results);
bool all_passed(const std::vector<CheckResult>& results);

}  // namespace cubicfolds
