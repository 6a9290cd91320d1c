#pragma once

// Phase helpers shared by the oscillatory summations. The fractional-turn
// sin/cos reduce through exact quarter turns, so phases that are exact
// multiples of 1/4 give exact 0 / +-1 values.

#include <cmath>

#include "zetalab/constants.hpp"

namespace zetalab {

// sin(2 pi f) and cos(2 pi f) for a fractional turn f (any finite value).
inline void sincos_two_pi(double f, double& s, double& c) {
    double turns = f - std::floor(f);          // [0, 1)
    double q = std::nearbyint(4.0 * turns);    // quarter-turn index 0..4
    double r = turns - 0.25 * q;               // |r| <= 1/8
    double sr = std::sin(kTwoPi * r);
    double cr = std::cos(kTwoPi * r);
    switch (static_cast<int>(q) & 3) {
        case 0: s = sr;  c = cr;  break;
        case 1: s = cr;  c = -sr; break;
        case 2: s = -sr; c = -cr; break;
        default: s = -cr; c = sr; break;
    }
}

// phi mod 2 pi reduced into [-pi, pi], computed in extended precision.
// Accurate to ~|phi| * 2^-63 absolute, which keeps phases of size ~1e7
// good to ~1e-12.
inline double reduce_angle(long double phi) {
    const long double k = std::nearbyint(phi / kTwoPiL);
    return static_cast<double>(phi - k * kTwoPiL);
}

}  // namespace zetalab
