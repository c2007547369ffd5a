#pragma once

#include "cdgforge/scenario.hpp"

namespace cdgforge {

struct VerifyOptions {
    uint64_t seed = 7;
    size_t random_count = 20;
    int window_lo = -4, window_hi = 4;
    long long field = 3;
};

struct SuiteReport {
    std::string suite;
    std::vector<Record> records;
    bool all_pass() const {
        for (const Record& r : records)
            if (!r.pass)
                return false;
        return true;
    }
};

/* Suites: curvature, adjunction, bar, gorenstein, homotopy, sign, all.
 * Throws ValidationError for unknown names or degenerate windows. */
std::vector<SuiteReport> run_verify(const std::string& suite, const VerifyOptions& opt);

std::string verify_results_json(const std::vector<SuiteReport>& reports, const VerifyOptions& opt);
std::string verify_human_text(const std::vector<SuiteReport>& reports);

}  // namespace cdgforge
