#pragma once

namespace hkit {

inline constexpr const char* kVersion = "0.1.0";

} // namespace hkit
