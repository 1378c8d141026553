#pragma once

#include "qshuffle/mould.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace qshuffle {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string counterexample;  // empty when pass
};

struct VerificationReport {
    std::string suite;
    nlohmann::ordered_json params;
    std::vector<CheckResult> checks;
    long long elapsed_ms = 0;

    bool passed() const;
    // Deterministic except for elapsed_ms, which sits in its own field so
    // golden comparisons can drop it.
    nlohmann::ordered_json to_json() const;
};

struct SuiteOptions {
    int max_n = -1;       // -1 picks the suite default
    int max_weight = -1;  // colored suites only
    Convention convention = Convention::suffix;
};

const std::vector<std::string>& suite_names();

// Throws std::invalid_argument for an unknown suite name. Checks fan out
// over a worker pool; the report order is the parameter order.
VerificationReport run_suite(const std::string& name, const SuiteOptions& options = {});

}  // namespace qshuffle
