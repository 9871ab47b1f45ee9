#pragma once

namespace corelex {
inline constexpr const char* kVersion = "1.0.0";
}
