#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "relaymap/types.hpp"

namespace relaymap {

// Phase lattice of a singular-fade circle: aligned circles carry phases 2m*pi/M,
// offset circles carry 2m*pi/M + pi/M.
enum class PhaseClass { aligned, offset };

enum class CirclePosition { inside, on_unit, outside };

// A singular fade state, held symbolically: gamma = sin(k1 pi/M)/sin(k2 pi/M) and
// theta = 2m*pi/M (+ pi/M for the offset class). All singularity decisions reduce to
// integer comparisons on these indices.
struct SingularFade {
    int k1 = 1;
    int k2 = 1;
    int m = 0;
    PhaseClass cls = PhaseClass::aligned;

    auto operator<=>(const SingularFade&) const = default;
};

// Builds a fade with the class derived from the parity of (k1, k2). k1 == k2 pairs
// collapse to the canonical unit-circle representative (1, 1).
SingularFade make_fade(const PskConfig& cfg, int k1, int k2, int m);

double fade_gamma(const PskConfig& cfg, const SingularFade& f);
double fade_theta(const PskConfig& cfg, const SingularFade& f);
cplx fade_value(const PskConfig& cfg, const SingularFade& f);

CirclePosition classify(const SingularFade& f);

// The fade of the swapped channel roles: gamma -> 1/gamma, theta -> -theta.
SingularFade reciprocal_fade(const PskConfig& cfg, const SingularFade& f);

struct CircleClass {
    int k1 = 1;
    int k2 = 1;
    double radius = 1.0;
    int count = 0;  // fades on this circle (always M)
};

// The M^2/4 - M/2 + 1 circles holding all singular fades.
std::vector<CircleClass> singular_circles(const PskConfig& cfg);

// All singular fades, ordered by (k1, k2, m).
std::vector<SingularFade> enumerate_singular_fades(const PskConfig& cfg);

// Closed form M * (M^2/4 - M/2 + 1).
std::size_t singular_fade_count(const PskConfig& cfg);

std::string to_string(PhaseClass cls);
PhaseClass phase_class_from_string(const std::string& s);
std::string fade_label(const SingularFade& f);

}  // namespace relaymap
