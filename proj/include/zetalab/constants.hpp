#pragma once

namespace zetalab {

inline constexpr double kEulerGamma = 0.57721566490153286060651209008240243104;
inline constexpr long double kEulerGammaL =
    0.57721566490153286060651209008240243104215933593992L;

inline constexpr double kPi = 3.14159265358979323846264338327950288420;
inline constexpr long double kPiL =
    3.14159265358979323846264338327950288419716939937510L;

inline constexpr double kTwoPi = 2.0 * kPi;
inline constexpr long double kTwoPiL = 2.0L * kPiL;

}  // namespace zetalab
