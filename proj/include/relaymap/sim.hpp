#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "relaymap/latin.hpp"
#include "relaymap/mapbook.hpp"
#include "relaymap/types.hpp"

namespace relaymap {

// Two-phase exchange: both ends transmit simultaneously, the relay jointly
// decodes the pair, maps it to a cluster index and broadcasts that index as a
// t-PSK symbol; each end strips its own symbol back out of the index.

enum class DecodeStatus { ok, not_in_image, ambiguous };

std::string to_string(DecodeStatus s);

// Joint ML over all M^2 transmit pairs; ties resolve to the first pair in
// a-major order so the result does not depend on the map in use.
std::pair<int, int> relay_ml_pair(const PskConfig& cfg, cplx h_a, cplx h_b, cplx y);

// Broadcast alphabet: t-PSK, point i at angle (2i+1)*pi/t.
cplx bc_point(int t, int index);
int bc_ml_decode(int t, cplx h, cplx y);

struct EndDecode {
    DecodeStatus status = DecodeStatus::ok;
    int symbol = -1;
};

// The end that sent `own_row` recovers the other symbol from a cluster index by
// scanning its row (resp. column when `own_is_row` is false).
EndDecode end_node_decode(const Clustering& cl, bool own_is_row, int own, int cluster_index);

struct ExchangeOutcome {
    int relay_a = -1, relay_b = -1;  // pair the relay decided on
    int cluster = -1;                // index it broadcast
    EndDecode at_a;                  // node A's estimate of B's symbol
    EndDecode at_b;                  // node B's estimate of A's symbol
};

ExchangeOutcome run_exchange(const PskConfig& cfg, const Clustering& cl, cplx h_a, cplx h_b,
                             cplx h_prime, int a, int b, cplx n_relay, cplx n_a, cplx n_b);

// A scheme is either a fixed clustering for every channel state, or a book the
// transmitter consults for the best clustering at the current fade.
struct SerScheme {
    std::string name;
    const Clustering* fixed = nullptr;
    const MapBook* book = nullptr;
};

struct SerPoint {
    double snr_db = 0;
    std::string scheme;
    long long trials = 0;
    long long errors = 0;  // summed over both ends
    double ser = 0;        // errors / (2 * trials)
};

struct SweepOptions {
    std::vector<double> snr_db;
    long long trials = 100000;
    std::uint64_t seed = 1;
    cplx h_a{1.0, 0.0};
    cplx h_b{1.0, 0.0};
    cplx h_prime{1.0, 0.0};
};

// Fixed-channel Monte Carlo sweep. Noise is drawn once per trial and shared by
// every scheme, and trials are split into fixed 8192-trial blocks whose RNG is
// reseeded from (seed, snr index, block), so results are byte-identical for a
// given seed no matter how the work is chunked.
std::vector<SerPoint> run_ser_sweep(const PskConfig& cfg, const std::vector<SerScheme>& schemes,
                                    const SweepOptions& opts);

void write_ser_csv(std::ostream& out, const std::vector<SerPoint>& points);
std::vector<SerPoint> parse_ser_csv(std::istream& in);

}  // namespace relaymap
