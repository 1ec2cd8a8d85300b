#pragma once

namespace twodist {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace twodist
