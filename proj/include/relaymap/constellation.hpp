#pragma once

#include <vector>

#include "relaymap/types.hpp"

namespace relaymap {

// A complex channel gain in polar form.
struct FadeState {
    double gamma = 1.0;
    double theta = 0.0;

    cplx value() const { return std::polar(gamma, theta); }
    static FadeState from(cplx z);
};

// Nonzero point of the difference constellation, on ring n (1..M/2) at angular slot k.
struct DiffPoint {
    int n = 1;
    int k = 0;
    cplx value;
};

// One point of the relay's received (noise-free) constellation: h_a*s_a + h_b*s_b.
struct EffectivePoint {
    int a = 0;
    int b = 0;
    cplx value;
};

// k-th M-PSK point, e^{j(2k+1)pi/M}.
cplx psk_point(const PskConfig& cfg, int k);
std::vector<cplx> psk_points(const PskConfig& cfg);

// Closed-form value for the difference point (n, k).
cplx diff_point_value(const PskConfig& cfg, int n, int k);

// All M^2/2 nonzero difference points, ordered by (n, k).
std::vector<DiffPoint> difference_constellation(const PskConfig& cfg);

// All M^2 effective points h_a*s_a + h_b*s_b, ordered by (a, b).
std::vector<EffectivePoint> effective_constellation(const PskConfig& cfg, cplx h_a, cplx h_b);

// Minimum distance of the effective constellation at relative fade z = h_b/h_a:
// min over distinct symbol pairs of |(s_a - s_a') + z (s_b - s_b')|.
double dmin(const PskConfig& cfg, cplx z);

// Number of distinct effective points at fade z (collisions merged within tol).
int distinct_point_count(const PskConfig& cfg, cplx z, double tol = kCollisionTol);

}  // namespace relaymap
