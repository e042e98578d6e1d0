#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace strictclose {

/// Runs one CLI command and writes the canonical report to `out`,
/// diagnostics to `err`. Returns the process exit code:
///   0  property holds / computation complete
///   1  property fails (witness printed)
///   2  indeterminate (incomplete box)
///   3  usage, parse or validation error
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace strictclose
