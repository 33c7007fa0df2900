#pragma once

namespace ringstab {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace ringstab
