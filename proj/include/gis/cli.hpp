#ifndef GIS_CLI_HPP_
#define GIS_CLI_HPP_

#include <ostream>
#include <string>
#include <vector>

namespace gis::cli {

/// Runs one subcommand. args excludes the program name. Returns 0 on
/// success, 1 on parse/validation errors and 2 on precondition violations
/// (messages go to err).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gis::cli

#endif  // GIS_CLI_HPP_
