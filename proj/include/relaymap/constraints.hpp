#pragma once

#include <vector>

#include "relaymap/fades.hpp"
#include "relaymap/latin.hpp"
#include "relaymap/types.hpp"

namespace relaymap {

// Cell groups that must share a relay symbol for the grid to remove one singular fade.
struct ConstraintSet {
    SingularFade fade;
    std::vector<std::vector<Cell>> groups;  // each sorted, mutually disjoint
};

// Closed-form singularity-removal constraints for a fade of an M-PSK system.
ConstraintSet generate_constraints(const PskConfig& cfg, const SingularFade& f);

// Merges each group with its (+M/2, +M/2)-translate, pairing the two constraint
// families into M groups of four cells. Requires k1 != k2 and k1, k2 != M/2.
ConstraintSet combine_constraints(const PskConfig& cfg, const ConstraintSet& cs);

// Constrained partial Latin square: constraint groups pre-filled with one fresh
// symbol per group.
struct Cpls {
    int n = 0;  // order
    GridMap grid;
    std::vector<std::vector<Cell>> groups;
    int plex_degree = 0;   // filled cells per row (and per column)
    int symbol_count = 0;  // number of groups
};

Cpls build_cpls(const PskConfig& cfg, const ConstraintSet& cs);

}  // namespace relaymap
