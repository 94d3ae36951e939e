#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace treebalance::cli {

// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

// Largest tree `generate` will print.
inline constexpr std::size_t kMaxGeneratedLeaves = std::size_t{1} << 20;
// Largest n accepted by `enumerate --count-only`.
inline constexpr std::size_t kMaxCountedLeaves = 2000;
// Largest n accepted by `table`.
inline constexpr std::size_t kMaxTableLeaves = 1'000'000;

struct Streams {
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
};

/// Runs the command line `args` (args[0] is the program name) and returns
/// the process exit code.
int run(const std::vector<std::string>& args, Streams io);

}  // namespace treebalance::cli
