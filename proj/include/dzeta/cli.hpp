#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dzeta {

// Front end behind the `dzeta` binary. Exit codes: 0 success, 1 config or
// usage error, 2 numerical non-convergence or failed validation checks.
int run_cli(std::vector<std::string> args, std::ostream& out,
            std::ostream& err);

}  // namespace dzeta
