#pragma once

namespace radosc {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace radosc
