#pragma once

#include <string>
#include <vector>

namespace poly {

/// Batch command surface. Exit codes: 0 success, 1 verification failure
/// (a counterexample or failed selftest), 2 usage or IO error.
int run_command(const std::vector<std::string>& argv);

}  // namespace poly
