#pragma once

#include <numbers>

namespace basel {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// 50 significant digits; used for every exact-to-float projection.
inline constexpr const char* kPiDigits = "3.1415926535897932384626433832795028841971693993751";

} // namespace basel
