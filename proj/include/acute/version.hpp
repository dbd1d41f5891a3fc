#pragma once

namespace acute {
inline constexpr const char* kVersion = "0.1.0";
}
