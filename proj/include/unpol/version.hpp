#pragma once

namespace unpol {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace unpol
