#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace misoshift {

/// Runs one CLI job.  args excludes the program name.  Returns the process
/// exit code: 0 success/verdict-true, 1 I/O, 2 precondition, 3 numerical,
/// 4 verdict-false.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

int run_cli(int argc, char** argv);

} // namespace misoshift
