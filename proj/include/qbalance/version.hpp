#pragma once

#include <string_view>

namespace qbalance {

inline constexpr std::string_view kVersion = "0.1.0";

// Generator family recorded in every output file so results can be
// reproduced against a pinned sampler implementation.
inline constexpr std::string_view kRngFamily = "philox4x32-10";

}  // namespace qbalance
