#pragma once

#include <string>

#include "cdgforge/corpus.hpp"

namespace cdgforge {

/* One record per executed assertion; serialized into the machine-readable
 * results file. */
struct Record {
    std::string id;
    bool pass = false;
    std::vector<long long> lhs_dims, rhs_dims;
    bool witness = false;
};

struct ScenarioOptions {
    uint64_t seed = 7;
    size_t random_count = 20;
    int window_lo = -4, window_hi = 4;
    std::optional<long long> field_override;
    std::string only_tag; /* when nonempty, run only commands with this tag */
};

struct ScenarioResult {
    /* 0 = all assertions pass, 1 = assertion failure, 2 = parse error,
     * 3 = validation error */
    int exit_code = 0;
    std::vector<Record> records;
    std::string error;
};

ScenarioResult run_scenario_file(const std::string& path, const ScenarioOptions& opt);
ScenarioResult run_scenario_text(const std::string& text, const ScenarioOptions& opt);

/* deterministic byte serialization of records (one line per record) */
std::string records_to_json(const std::vector<Record>& records, uint64_t seed);

}  // namespace cdgforge
