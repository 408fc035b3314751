#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace ehrhart::cli {

// Runs the command-line interface on argv-style arguments (program name
// excluded). Reports go to out, diagnostics to err. Exit codes: 0 on
// success / all checks passed, 1 on any verification failure, 2 on usage
// errors (bad grammar, malformed partitions, oracle guard violations).
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace ehrhart::cli
