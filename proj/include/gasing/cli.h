#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace gasing {

/// Command-line entry point; `args` excludes the program name.
/// Exit codes: 0 success, 1 invalid input or domain error, 2 a proof whose
/// certificate fails.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, char** argv);

}  // namespace gasing
