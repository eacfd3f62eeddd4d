#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sturmkit::cli {

/// Runs one CLI invocation.  args excludes the program name.  Returns
/// the process exit code: 0 on success, 2 on usage or domain errors,
/// 3 when a search exhausts its depth.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace sturmkit::cli
