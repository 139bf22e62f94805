#pragma once

#include <iosfwd>
#include <vector>

#include "relaymap/constellation.hpp"
#include "relaymap/fades.hpp"
#include "relaymap/latin.hpp"

namespace relaymap {

// Minimum effective-constellation distance between cells of different blocks.
struct DistanceReport {
    double d_min = 0.0;
    Cell a, b;  // witness pair: (x_A, x_B) and (x_A', x_B')
};

// Exhaustive scan over all cross-block cell pairs of an M x M clustering at fade z.
DistanceReport min_cluster_distance(const PskConfig& cfg, const Clustering& c, cplx z);

// True when the clustering keeps every colliding pair co-clustered at the exact
// symbolic fade value.
bool removes(const PskConfig& cfg, const Clustering& c, const SingularFade& f,
             double tol = kCollisionTol);

// Index of the candidate maximizing min-cluster-distance at z; ties take the
// smallest index.
int select_map(const PskConfig& cfg, const std::vector<Clustering>& candidates, cplx z);

struct RegionSample {
    double gamma = 0.0;
    double theta = 0.0;
    int clustering_id = -1;
    double d_min = 0.0;
};

struct QuantizeSpec {
    double gamma_max = 2.5;
    int n_gamma = 100;
    int n_theta = 100;
};

// Evaluates select_map at the centers of an n_gamma x n_theta polar grid covering
// gamma in (0, gamma_max], theta in (-pi, pi].
std::vector<RegionSample> quantize_plane(const PskConfig& cfg,
                                         const std::vector<Clustering>& candidates,
                                         const QuantizeSpec& spec);

void write_region_csv(std::ostream& os, const std::vector<RegionSample>& rows);
std::vector<RegionSample> parse_region_csv(std::istream& is);

// Rectangle variant: columns of `rect` correspond to the M-PSK indices listed in
// keep_cols (node B's reduced constellation).
DistanceReport min_cluster_distance_rect(const PskConfig& cfg, const GridMap& rect,
                                         const std::vector<int>& keep_cols, cplx z);

}  // namespace relaymap
