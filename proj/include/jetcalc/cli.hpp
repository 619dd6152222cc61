#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace jetcalc {

/// Runs one CLI invocation and writes the report to `out`.
/// Exit codes: 0 all checks pass/feasible, 1 a mathematical negative
/// (FAIL/INFEASIBLE verdict), 2 input or usage error.
int run_cli(const std::vector<std::string> &args, std::ostream &out);

/// Built-in demo scenario texts, keyed by demo name
/// (nodal, nongorenstein, taylor).
const std::string &demo_scenario_text(const std::string &name);

} // namespace jetcalc
