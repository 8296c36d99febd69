#pragma once

#include <cstdint>

namespace k3fib {

inline constexpr const char* kVersion = "0.1.0";

/// Seed used by the randomized exact identity checks when none is given;
/// always echoed in reports.
inline constexpr std::uint64_t kDefaultSeed = 20240613u;

}  // namespace k3fib
