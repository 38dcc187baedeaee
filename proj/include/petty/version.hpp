#pragma once

namespace petty {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace petty
