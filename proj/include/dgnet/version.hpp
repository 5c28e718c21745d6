#pragma once

namespace dgnet {

inline constexpr const char* version = "0.1.0";

}  // namespace dgnet
