#pragma once

namespace pixhash {

inline constexpr const char* kToolVersion = "pixhash 0.1.0";

}  // namespace pixhash
