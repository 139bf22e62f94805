#pragma once

#include <vector>

#include "relaymap/fades.hpp"
#include "relaymap/latin.hpp"

namespace relaymap {

// The two closed-form square families for odd (k, l): they differ in which symbol
// parity walks forward along the columns.
enum class OddVariant { even_start, odd_start };

// Walk construction: row 0 is the identity; symbol s is then placed at
// (k*t, s +- l*t) for t = 1..M, the sign set by the parity of s and the variant.
// Requires k, l odd. The final step must rewrite row 0 consistently or the
// construction throws.
GridMap construct_odd_pair(const PskConfig& cfg, int k, int l, OddVariant v);

// Fades on the circles (fold(n k), fold(n l)), n odd, 1 <= n <= M/2 - 1, split by
// which variant's clustering removes them (decided by the exact distance oracle).
// Requires l != +-k (mod M); those pairs walk the unit circle only, where the
// split property fails.
struct OddPairRemoval {
    std::vector<SingularFade> even_variant;
    std::vector<SingularFade> odd_variant;
};

OddPairRemoval removed_fades_of_odd_pair(const PskConfig& cfg, int k, int l);

// Doubles a level-M/2 square into a level-M square for an even pair (k, l),
// k != l, k, l != M/2. Writes the base into the parity blocks dictated by
// (k/2 - l/2) mod 2; the complementary blocks take the base's alphabet shifted
// by M/2. The caller supplies a base of order n = M/2 that removes:
//   (k/2 - l/2) even: fade (k/2, l/2, m=0) of the n-PSK system (phase 0);
//   (k/2 - l/2) odd:  fade (k/2, l/2, m=n-1, offset) (phase -pi/n); the second
//                     constrained block uses the base shifted one column.
// The result removes fade (k, l, m=0) of the M-PSK system.
GridMap lift_quadruplicate(const GridMap& base, int k, int l);

// True when the lift writes the base into the even-even/odd-odd parity blocks.
bool lift_uses_diagonal_blocks(int k, int l);

}  // namespace relaymap
