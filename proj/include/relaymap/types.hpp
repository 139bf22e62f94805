#pragma once

#include <compare>
#include <complex>
#include <cstdint>
#include <stdexcept>

namespace relaymap {

using cplx = std::complex<double>;

inline constexpr double kPi = 3.141592653589793238462643383279502884;

// Collision / cluster-distance threshold: distances below this count as a collision.
inline constexpr double kCollisionTol = 1e-9;

// Tolerance for closed-form geometry identities (radii, phases).
inline constexpr double kFormTol = 1e-12;

// One slot of a map grid: row = symbol index of node A, col = symbol index of node B.
struct Cell {
    int r = 0;
    int c = 0;
    auto operator<=>(const Cell&) const = default;
};

// M-PSK configuration, M = 2^lambda.
struct PskConfig {
    int m = 2;
    int lambda = 1;

    static PskConfig of(int m) {
        if (m < 2 || (m & (m - 1)) != 0)
            throw std::invalid_argument("PSK size must be a power of two >= 2");
        PskConfig cfg;
        cfg.m = m;
        cfg.lambda = 0;
        for (int v = m; v > 1; v >>= 1) ++cfg.lambda;
        return cfg;
    }
};

inline int mod(int a, int n) {
    int r = a % n;
    return r < 0 ? r + n : r;
}

}  // namespace relaymap
