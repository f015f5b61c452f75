#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace pbw::cli {

// Runs one subcommand. Returns 0 when the suite passes, 1 when it fails and
// 2 on a usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace pbw::cli
