#ifndef HK_CLI_HPP
#define HK_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace hk::cli {

/// Exit codes: 0 success, 1 verification mismatch, 2 usage error,
/// 3 capacity exceeded.
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitCapacity = 3;

/// Runs the `hk` command line; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace hk::cli

#endif  // HK_CLI_HPP
