#pragma once

#include <string>
#include <vector>

namespace mdr {

// A parsed CLI invocation. Inputs are file paths except for `localize`,
// where the trailing two entries name the objects.
struct JobSpec {
    std::string command;
    std::vector<std::string> inputs;
    long window = 16;
    bool json_output = true;
    std::string filter;  // selftest --filter
};

struct JobResult {
    int exit_code = 0;
    std::string output;
    std::string error;
};

// Executes a job; never throws. Exit codes: 0 success, 2 input/precondition
// faults, 3 internal invariant violations.
JobResult run_job(const JobSpec& spec);

// The named invariant battery behind `mdr selftest`.
struct SelftestLine {
    std::string name;
    bool passed = false;
    long millis = 0;
};
std::vector<SelftestLine> run_selftest(const std::string& filter);

}  // namespace mdr
