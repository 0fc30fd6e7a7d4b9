#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cannonball::cli {

// exit codes
inline constexpr int kOk = 0;
inline constexpr int kPrecondition = 1;
inline constexpr int kResource = 2;
inline constexpr int kUsage = 64;
inline constexpr int kInternal = 70;

// Parses argv (argv[0] is the program name), dispatches one subcommand and
// writes its output to `out` unless --out names a file.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace cannonball::cli
