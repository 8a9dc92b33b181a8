#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace avghaz::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kUsageOrParseError = 2;
inline constexpr int kDomainError = 3;
inline constexpr int kModelError = 4;

inline constexpr unsigned long long kDefaultSeed = 20250101ULL;

/// Runs `avghaz <subcommand> ...`; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace avghaz::cli
