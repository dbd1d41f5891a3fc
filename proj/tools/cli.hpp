#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace acute::cli {

// Dispatches the acute subcommands. Returns 0 on success, 1 on a domain
// error (machine-readable JSON on err), 2 on a usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace acute::cli
