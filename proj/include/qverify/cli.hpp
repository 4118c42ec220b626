#pragma once

#include <ostream>

namespace qverify {

// Exit codes of the command-line front end.
enum ExitCode : int { exit_ok = 0, exit_mismatch = 1, exit_usage = 2, exit_builder = 3 };

int run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

} // namespace qverify
