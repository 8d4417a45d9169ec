// The verification suites: every acceptance check, shared between the CLI
// `verify` subcommand and the acceptance test binary.
#pragma once

#include <string>
#include <vector>

namespace ush {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

// criteria are numbered 1..12
std::vector<CheckResult> run_criterion(int index, bool small_sweep = true);

// suite name -> criteria indices; throws on unknown suite
std::vector<int> suite_criteria(const std::string& suite);

}  // namespace ush
