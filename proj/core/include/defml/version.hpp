#pragma once

namespace defml {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace defml
