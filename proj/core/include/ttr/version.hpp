#pragma once

namespace ttr {

inline constexpr const char* kVersion = "1.0.0";

}  // namespace ttr
