#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace igrr {

/// Runs the igrr command line: `gen KIND ...` or `verify NAME ...`.
/// Returns 0 (pass), 1 (falsified) or 2 (usage error).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace igrr
