#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rbmono {

// Runs one CLI invocation. Deterministic: identical argv produces
// byte-identical output. Exit codes: 0 success or Pass, 1 Fail or
// NotRotaBaxter, 2 usage or input error.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace rbmono
