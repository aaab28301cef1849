#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace citerank::cli {

enum ExitCode : int {
    ok = 0,
    usage_error = 1,
    data_error = 2,
    not_converged = 3,
};

/// Run the citerank command line. `args` excludes the program name. Machine
/// output goes to --out (or `out` when --out is absent); diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace citerank::cli
