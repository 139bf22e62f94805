#include "relaymap/constellation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace relaymap {

FadeState FadeState::from(cplx z) {
    FadeState f;
    f.gamma = std::abs(z);
    f.theta = std::arg(z);
    return f;
}

cplx psk_point(const PskConfig& cfg, int k) {
    return std::polar(1.0, (2 * mod(k, cfg.m) + 1) * kPi / cfg.m);
}

std::vector<cplx> psk_points(const PskConfig& cfg) {
    std::vector<cplx> pts(cfg.m);
    for (int k = 0; k < cfg.m; ++k) pts[k] = psk_point(cfg, k);
    return pts;
}

cplx diff_point_value(const PskConfig& cfg, int n, int k) {
    if (n < 1 || n > cfg.m / 2) throw std::invalid_argument("ring index out of range");
    // s_a - s_b = 2 j sin((a-b)pi/M) e^{j(a+b+1)pi/M}; the leading j contributes the
    // pi/2 below. Ring n carries M points stepped by 2pi/M, odd rings anchored on a
    // multiple of 2pi/M, even rings offset by pi/M.
    double phase = 2.0 * kPi * mod(k, cfg.m) / cfg.m + kPi / 2.0;
    if (n % 2 == 0) phase += kPi / cfg.m;
    return std::polar(2.0 * std::sin(n * kPi / cfg.m), phase);
}

std::vector<DiffPoint> difference_constellation(const PskConfig& cfg) {
    std::vector<DiffPoint> pts;
    pts.reserve(static_cast<std::size_t>(cfg.m) * cfg.m / 2);
    for (int n = 1; n <= cfg.m / 2; ++n)
        for (int k = 0; k < cfg.m; ++k) pts.push_back({n, k, diff_point_value(cfg, n, k)});
    return pts;
}

std::vector<EffectivePoint> effective_constellation(const PskConfig& cfg, cplx h_a, cplx h_b) {
    std::vector<EffectivePoint> pts;
    pts.reserve(static_cast<std::size_t>(cfg.m) * cfg.m);
    auto s = psk_points(cfg);
    for (int a = 0; a < cfg.m; ++a)
        for (int b = 0; b < cfg.m; ++b) pts.push_back({a, b, h_a * s[a] + h_b * s[b]});
    return pts;
}

double dmin(const PskConfig& cfg, cplx z) {
    auto pts = effective_constellation(cfg, 1.0, z);
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j)
            best = std::min(best, std::abs(pts[i].value - pts[j].value));
    return best;
}

int distinct_point_count(const PskConfig& cfg, cplx z, double tol) {
    auto pts = effective_constellation(cfg, 1.0, z);
    // Union-find over colliding points; count resulting classes.
    std::vector<int> parent(pts.size());
    for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = static_cast<int>(i);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j)
            if (std::abs(pts[i].value - pts[j].value) < tol) {
                int a = find(static_cast<int>(i)), b = find(static_cast<int>(j));
                if (a != b) parent[a] = b;
            }
    int count = 0;
    for (std::size_t i = 0; i < pts.size(); ++i)
        if (find(static_cast<int>(i)) == static_cast<int>(i)) ++count;
    return count;
}

}  // namespace relaymap
