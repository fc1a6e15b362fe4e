#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cogmap {

/// Command-line front end.  Domain output goes to `out`, diagnostics to
/// `err` (exactly one line per failure, prefixed "cogmap: error: <category>:").
/// Returns 0 on success, 1 on domain errors, 2 on usage errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cogmap
