#pragma once

namespace qlra {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace qlra
