#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace nlie {

/// Runs one CLI invocation. `args` excludes the program name. Returns the
/// process exit code: 0 on success, 1 on a reported violation, 2 on errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nlie
