#ifndef GIS_CLI_HPP_
#define GIS_CLI_HPP_

#include <ostream>
#include <string>
#include <vector>

namespace gis::cli {

/// Dispatch one command-line invocation (argv without the program name).
/// Writes results to out and diagnostics to err; returns the process
/// exit status. The CLI adds no semantics of its own: every result is
/// reproducible through the library.
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace gis::cli

#endif  // GIS_CLI_HPP_
