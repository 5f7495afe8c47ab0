// Verification suites: each runs a family of property checks over seeded
// random instances and returns a machine-readable report.  Reports are
// deterministic for a fixed seed (each case derives its generator from
// seed ^ fnv1a64(case id), so the order of execution does not matter), and
// every failure carries a witness with the seed and instance id needed to
// replay it.  Check failures are recorded in the report, never thrown;
// an unknown suite name is a usage error and throws std::invalid_argument.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dk/json_io.hpp"

namespace dk {

struct SuiteOptions {
    std::uint64_t seed = 1;
    int T = 4;         // truncation degree for all generated objects
    int max_rank = 3;  // total rank bound handed to the random generators
    int cases = 50;    // random cases per property
};

std::vector<std::string> suite_names();
Json run_suite(const std::string& name, const SuiteOptions& opt);
bool report_ok(const Json& report);

}  // namespace dk
