#pragma once

#include <vector>

#include "relaymap/fades.hpp"
#include "relaymap/latin.hpp"
#include "relaymap/types.hpp"

namespace relaymap {

// When end B signals with N-PSK (N < M, both powers of two), its points sit on
// every (M/N)-th M-PSK angle; a map for the smaller system is the M x M map with
// the other columns deleted.

std::vector<int> kept_columns(const PskConfig& cfg, int n, int offset = 0);

// Channel ratios that collapse two distinct transmit pairs of the M x N system.
// Every one of them already appears in the M x M singular set, so they are
// reported as members of that enumeration.
std::vector<SingularFade> rectangle_singular_fades(const PskConfig& cfg,
                                                   const std::vector<int>& keep);

// `rect` is an M x N grid whose column j carries B's kept point keep[j].
bool rectangle_removes(const PskConfig& cfg, const GridMap& rect, const std::vector<int>& keep,
                       const SingularFade& f, double tol = kCollisionTol);

}  // namespace relaymap
