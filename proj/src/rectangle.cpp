#include "relaymap/rectangle.hpp"

#include <cmath>
#include <stdexcept>

#include "relaymap/constellation.hpp"
#include "relaymap/metrics.hpp"

namespace relaymap {

std::vector<int> kept_columns(const PskConfig& cfg, int n, int offset) {
    if (n < 2 || n > cfg.m || (n & (n - 1)) != 0)
        throw std::invalid_argument("column alphabet must be a power of two in [2, M]");
    int step = cfg.m / n;
    if (offset < 0 || offset >= step) throw std::invalid_argument("column offset out of range");
    std::vector<int> keep(n);
    for (int i = 0; i < n; ++i) keep[i] = offset + i * step;
    return keep;
}

std::vector<SingularFade> rectangle_singular_fades(const PskConfig& cfg,
                                                   const std::vector<int>& keep) {
    auto pts = psk_points(cfg);
    std::vector<cplx> values;
    for (int a = 0; a < cfg.m; ++a)
        for (int a2 = 0; a2 < cfg.m; ++a2)
            for (int b : keep)
                for (int b2 : keep) {
                    if (b == b2 || (a == a2 && b == b2)) continue;
                    cplx z = -(pts[a] - pts[a2]) / (pts[b] - pts[b2]);
                    if (std::abs(z) < kCollisionTol) continue;
                    bool fresh = true;
                    for (const cplx& v : values)
                        if (std::abs(v - z) < kCollisionTol) {
                            fresh = false;
                            break;
                        }
                    if (fresh) values.push_back(z);
                }
    std::vector<SingularFade> out;
    for (const auto& f : enumerate_singular_fades(cfg)) {
        cplx fv = fade_value(cfg, f);
        for (const cplx& v : values)
            if (std::abs(v - fv) < kCollisionTol) {
                out.push_back(f);
                break;
            }
    }
    std::size_t matched = 0;
    for (const cplx& v : values)
        for (const auto& f : out)
            if (std::abs(fade_value(cfg, f) - v) < kCollisionTol) {
                ++matched;
                break;
            }
    if (matched != values.size())
        throw std::logic_error("rectangle fade outside the square singular set");
    return out;
}

bool rectangle_removes(const PskConfig& cfg, const GridMap& rect, const std::vector<int>& keep,
                       const SingularFade& f, double tol) {
    return min_cluster_distance_rect(cfg, rect, keep, fade_value(cfg, f)).d_min > tol;
}

}  // namespace relaymap
