#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace soflag::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;
inline constexpr int kExitUsage = 2;

/// Seed used by `verify` when neither --seed nor SOFLAG_SEED is given.
inline constexpr std::uint64_t kDefaultSeed = 12345;

/// Runs one command. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace soflag::cli
