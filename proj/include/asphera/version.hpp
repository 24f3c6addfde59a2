#pragma once

namespace asphera {

inline constexpr const char* kVersion = "0.1.0";

} // namespace asphera
