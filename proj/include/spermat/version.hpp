#pragma once

namespace spermat {

inline constexpr const char* kVersion = "1.0.0";

}  // namespace spermat
