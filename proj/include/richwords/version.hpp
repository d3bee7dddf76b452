#pragma once

namespace richwords {

inline constexpr const char* kToolVersion = "1.0.0";

}  // namespace richwords
