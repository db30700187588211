#pragma once

namespace addcomb {

inline constexpr const char* kVersion = "0.1.0";

} // namespace addcomb
