#pragma once

namespace stare {

inline constexpr const char* kVersion = "0.1.0";
inline constexpr const char* kToolName = "staresim";

}  // namespace stare
