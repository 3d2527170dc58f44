#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace springer {

// Parses argv-style arguments (program name excluded) and runs one
// subcommand. Exit code contract: 0 success or verified, 1 verification
// failed, 2 invalid input.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace springer
