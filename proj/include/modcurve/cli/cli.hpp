#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace modcurve {

// Parses and executes one command-line invocation.  Results go to out,
// errors (one stable line, "error: ...") to err.  Returns 0 when the
// requested computation or verification succeeded, 1 when a verification
// ran but failed, and 2 for input errors of any kind.
//
// args excludes the program name.  The int/argv overload follows main()'s
// convention (argv[0] is the program name).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace modcurve
