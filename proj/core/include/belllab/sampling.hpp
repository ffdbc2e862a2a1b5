#pragma once

#include <cmath>

#include "belllab/algebra.hpp"
#include "belllab/rng.hpp"

namespace bell {

// Uniform point on the unit 2-sphere (area measure).
inline Vec3 uniform_unit3(SplitMix64& g) {
    constexpr double kTwoPi = 6.283185307179586476925286766559;
    const double z = 2.0 * g.uniform() - 1.0;
    const double phi = kTwoPi * g.uniform();
    const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
    return {r * std::cos(phi), r * std::sin(phi), z};
}

inline Direction uniform_direction(SplitMix64& g) {
    constexpr double kTwoPi = 6.283185307179586476925286766559;
    const double z = 2.0 * g.uniform() - 1.0;
    return Direction(std::acos(std::clamp(z, -1.0, 1.0)), kTwoPi * g.uniform());
}

// Standard normal via Box-Muller (first component only; stateless per call pair).
inline double standard_normal(SplitMix64& g) {
    constexpr double kTwoPi = 6.283185307179586476925286766559;
    const double u = 1.0 - g.uniform();  // (0, 1]
    const double v = g.uniform();
    return std::sqrt(-2.0 * std::log(u)) * std::cos(kTwoPi * v);
}

// Uniform point on the unit 3-sphere in V4 (four normals, normalized).
inline FourVector uniform_unit4(SplitMix64& g) {
    for (;;) {
        const FourVector w{standard_normal(g),
                           {standard_normal(g), standard_normal(g), standard_normal(g)}};
        const double n2 = inner4(w, w);
        if (n2 > 1e-12) return w * (1.0 / std::sqrt(n2));
    }
}

}  // namespace bell
