#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace gring {

// Full command-line driver, separated from main() so tests can invoke it
// with captured streams. Results go to `out` as JSON (sorted keys, so byte
// deterministic); diagnostics go to `err`.
//
// Exit codes: 0 success / all confirmed or vacuous; 1 refutation,
// counterexample or --expect mismatch; 2 usage or parse error; 3 a cap or
// deadline left results undecided without any refutation.
int cli_run(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace gring
