#pragma once

// Command-line front end. run() returns the process exit code: 0 on success,
// 1 on usage errors (unknown subcommand, malformed arguments), 2 on domain
// errors raised by the library. Reports go to `out`, diagnostics to `err`.

#include <ostream>
#include <string>
#include <vector>

#include "minfol/report.hpp"

namespace minfol::cli {

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Report of the full chain classify -> lift -> homology action -> Torelli
// order -> mapping-torus geometry -> leaf genus growth.
report::Json pipeline_frw(const std::string& matrix, const std::string& origami_name);

}  // namespace minfol::cli
