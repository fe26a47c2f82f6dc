#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dccm {

// Entry point of the `dccm` command line tool. Subcommands: verify, solve,
// hypotheses, report. Returns the process exit code (0 pass, 1 usage error,
// 2 axiom/hypothesis finding, 3 infeasible contraction family).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dccm
