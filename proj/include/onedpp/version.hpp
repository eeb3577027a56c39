#pragma once

namespace onedpp {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace onedpp
