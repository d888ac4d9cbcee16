#pragma once

#include <iosfwd>
#include <string>
#include <vector>

/// Command-line surface. The whole CLI is a library function so the test
/// suites can drive it in-process; tools/spinor3_main.cpp is a thin wrapper.
///
/// Exit codes: 0 success, 1 validation error, 2 numerical failure.
namespace spinor3 {

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace spinor3
