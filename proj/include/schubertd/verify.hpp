#pragma once

#include <string>
#include <vector>

namespace schubertd::verify {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;  // populated on failure
};

std::vector<std::string> suite_names();

// Runs one named invariant suite ("all" runs everything).
std::vector<CheckResult> run_suite(const std::string& suite);

bool all_passed(const std::vector<CheckResult>& results);

}  // namespace schubertd::verify
