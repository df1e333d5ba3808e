#pragma once

namespace braidc {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace braidc
