#pragma once

namespace liquid {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace liquid
