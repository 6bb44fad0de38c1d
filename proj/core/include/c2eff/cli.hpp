#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace c2eff {

// Command-line front end.  args excludes the program name.  Returns 0 on
// success, 1 when a verification suite reports a violation, 2 on a usage
// error.  All output is deterministic.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Convenience overload for main(); writes to stdout/stderr.
int run(int argc, const char* const* argv);

}  // namespace c2eff
