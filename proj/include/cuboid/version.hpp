#pragma once

#include <string_view>

namespace cuboid {

inline constexpr std::string_view kToolName = "cuboidcheck";
inline constexpr std::string_view kToolVersion = "0.1.0";

}  // namespace cuboid
