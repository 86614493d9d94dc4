#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace nct::cli {

/// Runs one CLI invocation (arguments without the program name). Returns the
/// process exit code: 0 success, 1 usage or parse error, 2 domain error,
/// 3 internal error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nct::cli
