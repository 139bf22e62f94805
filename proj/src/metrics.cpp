#include "relaymap/metrics.hpp"

#include <cmath>
#include <cstdio>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <string>

namespace relaymap {

namespace {

DistanceReport scan(const PskConfig& cfg, const std::vector<int>& block, int rows, int cols,
                    const std::vector<cplx>& col_points, cplx z) {
    auto sa = psk_points(cfg);
    DistanceReport rep;
    rep.d_min = std::numeric_limits<double>::infinity();
    const int total = rows * cols;
    for (int p = 0; p < total; ++p) {
        const int a = p / cols, b = p % cols;
        const cplx va = sa[a] + z * col_points[b];
        for (int q = p + 1; q < total; ++q) {
            const int a2 = q / cols, b2 = q % cols;
            if (block[p] == block[q]) continue;
            double d = std::abs(va - (sa[a2] + z * col_points[b2]));
            if (d < rep.d_min) {
                rep.d_min = d;
                rep.a = {a, b};
                rep.b = {a2, b2};
            }
        }
    }
    return rep;
}

}  // namespace

DistanceReport min_cluster_distance(const PskConfig& cfg, const Clustering& c, cplx z) {
    if (c.rows() > cfg.m || c.cols() > cfg.m)
        throw std::invalid_argument("clustering exceeds the constellation size");
    std::vector<int> block(static_cast<std::size_t>(cfg.m) * cfg.m, -1);
    for (int i = 0; i < cfg.m; ++i)
        for (int j = 0; j < cfg.m; ++j) {
            int b = c.block_of(i, j);
            if (b < 0) throw std::invalid_argument("clustering must cover all cells");
            block[static_cast<std::size_t>(i) * cfg.m + j] = b;
        }
    return scan(cfg, block, cfg.m, cfg.m, psk_points(cfg), z);
}

bool removes(const PskConfig& cfg, const Clustering& c, const SingularFade& f, double tol) {
    return min_cluster_distance(cfg, c, fade_value(cfg, f)).d_min > tol;
}

int select_map(const PskConfig& cfg, const std::vector<Clustering>& candidates, cplx z) {
    if (candidates.empty()) throw std::invalid_argument("no candidate clusterings");
    int best = 0;
    double best_d = -1.0;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
        double d = min_cluster_distance(cfg, candidates[i], z).d_min;
        if (d > best_d) {
            best_d = d;
            best = static_cast<int>(i);
        }
    }
    return best;
}

std::vector<RegionSample> quantize_plane(const PskConfig& cfg,
                                         const std::vector<Clustering>& candidates,
                                         const QuantizeSpec& spec) {
    if (spec.n_gamma < 1 || spec.n_theta < 1 || spec.gamma_max <= 0.0)
        throw std::invalid_argument("bad quantization grid");
    std::vector<RegionSample> out;
    out.reserve(static_cast<std::size_t>(spec.n_gamma) * spec.n_theta);
    for (int i = 0; i < spec.n_gamma; ++i) {
        double gamma = (i + 0.5) * spec.gamma_max / spec.n_gamma;
        for (int j = 0; j < spec.n_theta; ++j) {
            double theta = -kPi + (j + 0.5) * 2.0 * kPi / spec.n_theta;
            cplx z = std::polar(gamma, theta);
            int id = select_map(cfg, candidates, z);
            double d = min_cluster_distance(cfg, candidates[id], z).d_min;
            out.push_back({gamma, theta, id, d});
        }
    }
    return out;
}

void write_region_csv(std::ostream& os, const std::vector<RegionSample>& rows) {
    os << "gamma,theta,clustering_id,d_min\n";
    char buf[128];
    for (const auto& r : rows) {
        std::snprintf(buf, sizeof buf, "%.9g,%.9g,%d,%.9g\n", r.gamma, r.theta, r.clustering_id,
                      r.d_min);
        os << buf;
    }
}

std::vector<RegionSample> parse_region_csv(std::istream& is) {
    std::vector<RegionSample> rows;
    std::string line;
    if (!std::getline(is, line) || line != "gamma,theta,clustering_id,d_min")
        throw std::runtime_error("bad region CSV header");
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        RegionSample r;
        if (std::sscanf(line.c_str(), "%lg,%lg,%d,%lg", &r.gamma, &r.theta, &r.clustering_id,
                        &r.d_min) != 4)
            throw std::runtime_error("bad region CSV row: " + line);
        rows.push_back(r);
    }
    return rows;
}

DistanceReport min_cluster_distance_rect(const PskConfig& cfg, const GridMap& rect,
                                         const std::vector<int>& keep_cols, cplx z) {
    if (rect.rows() != cfg.m || rect.cols() != static_cast<int>(keep_cols.size()))
        throw std::invalid_argument("rectangle shape mismatch");
    if (!rect.complete()) throw std::invalid_argument("rectangle must be complete");
    std::vector<int> block(static_cast<std::size_t>(rect.rows()) * rect.cols());
    for (int i = 0; i < rect.rows(); ++i)
        for (int j = 0; j < rect.cols(); ++j)
            block[static_cast<std::size_t>(i) * rect.cols() + j] = rect.at(i, j);
    std::vector<cplx> col_points;
    col_points.reserve(keep_cols.size());
    for (int k : keep_cols) col_points.push_back(psk_point(cfg, k));
    return scan(cfg, block, rect.rows(), rect.cols(), col_points, z);
}

}  // namespace relaymap
