#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace hqft::cli {

/// Exit codes: 0 success, 1 usage error, 2 invariant violation or failed check, 3 malformed input.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace hqft::cli
