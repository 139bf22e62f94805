#include "relaymap/fades.hpp"

#include <cmath>

namespace relaymap {

SingularFade make_fade(const PskConfig& cfg, int k1, int k2, int m) {
    if (k1 < 1 || k1 > cfg.m / 2 || k2 < 1 || k2 > cfg.m / 2)
        throw std::invalid_argument("ring indices must lie in 1..M/2");
    SingularFade f;
    if (k1 == k2) {
        f.k1 = f.k2 = 1;  // every k1 == k2 pair is the unit circle
    } else {
        f.k1 = k1;
        f.k2 = k2;
    }
    f.m = mod(m, cfg.m);
    f.cls = (k1 % 2 == k2 % 2) ? PhaseClass::aligned : PhaseClass::offset;
    return f;
}

double fade_gamma(const PskConfig& cfg, const SingularFade& f) {
    return std::sin(f.k1 * kPi / cfg.m) / std::sin(f.k2 * kPi / cfg.m);
}

double fade_theta(const PskConfig& cfg, const SingularFade& f) {
    double t = 2.0 * f.m * kPi / cfg.m;
    if (f.cls == PhaseClass::offset) t += kPi / cfg.m;
    // normalize to (-pi, pi]
    while (t > kPi) t -= 2.0 * kPi;
    while (t <= -kPi) t += 2.0 * kPi;
    return t;
}

cplx fade_value(const PskConfig& cfg, const SingularFade& f) {
    return std::polar(fade_gamma(cfg, f), fade_theta(cfg, f));
}

CirclePosition classify(const SingularFade& f) {
    if (f.k1 == f.k2) return CirclePosition::on_unit;
    return f.k1 < f.k2 ? CirclePosition::inside : CirclePosition::outside;
}

SingularFade reciprocal_fade(const PskConfig& cfg, const SingularFade& f) {
    SingularFade r;
    r.k1 = f.k2;
    r.k2 = f.k1;
    r.cls = f.cls;  // parity pattern is symmetric under the swap
    // theta -> -theta on the same phase lattice.
    r.m = (f.cls == PhaseClass::aligned) ? mod(-f.m, cfg.m) : mod(-f.m - 1, cfg.m);
    return r;
}

std::vector<CircleClass> singular_circles(const PskConfig& cfg) {
    std::vector<CircleClass> circles;
    circles.push_back({1, 1, 1.0, cfg.m});
    for (int k1 = 1; k1 <= cfg.m / 2; ++k1)
        for (int k2 = 1; k2 <= cfg.m / 2; ++k2) {
            if (k1 == k2) continue;
            circles.push_back({k1, k2, std::sin(k1 * kPi / cfg.m) / std::sin(k2 * kPi / cfg.m),
                               cfg.m});
        }
    return circles;
}

std::vector<SingularFade> enumerate_singular_fades(const PskConfig& cfg) {
    std::vector<SingularFade> fades;
    for (const auto& c : singular_circles(cfg))
        for (int m = 0; m < cfg.m; ++m) fades.push_back(make_fade(cfg, c.k1, c.k2, m));
    return fades;
}

std::size_t singular_fade_count(const PskConfig& cfg) {
    std::size_t m = static_cast<std::size_t>(cfg.m);
    return m * (m * m / 4 - m / 2 + 1);
}

std::string to_string(PhaseClass cls) {
    return cls == PhaseClass::aligned ? "aligned" : "offset";
}

PhaseClass phase_class_from_string(const std::string& s) {
    if (s == "aligned") return PhaseClass::aligned;
    if (s == "offset") return PhaseClass::offset;
    throw std::invalid_argument("unknown phase class: " + s);
}

std::string fade_label(const SingularFade& f) {
    return "(" + std::to_string(f.k1) + "," + std::to_string(f.k2) + "," + std::to_string(f.m) +
           "," + to_string(f.cls) + ")";
}

}  // namespace relaymap
