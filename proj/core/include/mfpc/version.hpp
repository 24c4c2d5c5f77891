#pragma once

namespace mfpc {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace mfpc
