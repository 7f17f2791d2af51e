#pragma once

namespace poly {

inline constexpr const char* kToolName = "polyrad";
inline constexpr const char* kToolVersion = "0.1.0";

}  // namespace poly
