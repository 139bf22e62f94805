#include "relaymap/sim.hpp"

#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <stdexcept>

#include "relaymap/constellation.hpp"
#include "relaymap/metrics.hpp"

namespace relaymap {

std::string to_string(DecodeStatus s) {
    switch (s) {
        case DecodeStatus::ok: return "ok";
        case DecodeStatus::not_in_image: return "not_in_image";
        case DecodeStatus::ambiguous: return "ambiguous";
    }
    return "?";
}

std::pair<int, int> relay_ml_pair(const PskConfig& cfg, cplx h_a, cplx h_b, cplx y) {
    auto pts = psk_points(cfg);
    double best = 0;
    std::pair<int, int> arg{-1, -1};
    for (int a = 0; a < cfg.m; ++a)
        for (int b = 0; b < cfg.m; ++b) {
            double d = std::norm(y - h_a * pts[a] - h_b * pts[b]);
            if (arg.first < 0 || d < best) {
                best = d;
                arg = {a, b};
            }
        }
    return arg;
}

cplx bc_point(int t, int index) { return std::polar(1.0, (2 * index + 1) * kPi / t); }

int bc_ml_decode(int t, cplx h, cplx y) {
    double best = 0;
    int arg = -1;
    for (int i = 0; i < t; ++i) {
        double d = std::norm(y - h * bc_point(t, i));
        if (arg < 0 || d < best) {
            best = d;
            arg = i;
        }
    }
    return arg;
}

EndDecode end_node_decode(const Clustering& cl, bool own_is_row, int own, int cluster_index) {
    EndDecode out;
    int n = own_is_row ? cl.cols() : cl.rows();
    for (int x = 0; x < n; ++x) {
        int idx = own_is_row ? cl.block_of(own, x) : cl.block_of(x, own);
        if (idx != cluster_index) continue;
        if (out.symbol >= 0) {
            out.status = DecodeStatus::ambiguous;
            return out;
        }
        out.symbol = x;
    }
    if (out.symbol < 0) out.status = DecodeStatus::not_in_image;
    return out;
}

ExchangeOutcome run_exchange(const PskConfig& cfg, const Clustering& cl, cplx h_a, cplx h_b,
                             cplx h_prime, int a, int b, cplx n_relay, cplx n_a, cplx n_b) {
    ExchangeOutcome out;
    cplx y = h_a * psk_point(cfg, a) + h_b * psk_point(cfg, b) + n_relay;
    auto [ra, rb] = relay_ml_pair(cfg, h_a, h_b, y);
    out.relay_a = ra;
    out.relay_b = rb;
    out.cluster = cl.block_of(ra, rb);
    if (out.cluster < 0) throw std::invalid_argument("clustering must cover all cells");
    int t = cl.block_count();
    cplx x_r = bc_point(t, out.cluster);
    out.at_a = end_node_decode(cl, true, a, bc_ml_decode(t, h_prime, h_prime * x_r + n_a));
    out.at_b = end_node_decode(cl, false, b, bc_ml_decode(t, h_prime, h_prime * x_r + n_b));
    return out;
}

namespace {

constexpr long long kBlockTrials = 8192;

std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

struct BlockRng {
    std::uint64_t state;
    BlockRng(std::uint64_t seed, std::uint64_t snr_idx, std::uint64_t block)
        : state(mix64(seed ^ mix64(snr_idx ^ mix64(block)))) {}

    std::uint64_t next() {
        state = mix64(state);
        return state;
    }

    int uniform_int(int n) {
        return static_cast<int>((static_cast<__uint128_t>(next()) * n) >> 64);
    }

    double uniform01() {  // open (0,1), 53 bits
        return (static_cast<double>(next() >> 11) + 0.5) * 0x1p-53;
    }

    void gaussian_pair(double& g0, double& g1) {
        double r = std::sqrt(-2.0 * std::log(uniform01()));
        double phi = 2.0 * kPi * uniform01();
        g0 = r * std::cos(phi);
        g1 = r * std::sin(phi);
    }

    cplx gaussian_cplx(double sigma) {
        double g0, g1;
        gaussian_pair(g0, g1);
        return {sigma * g0 / std::sqrt(2.0), sigma * g1 / std::sqrt(2.0)};
    }
};

}  // namespace

std::vector<SerPoint> run_ser_sweep(const PskConfig& cfg, const std::vector<SerScheme>& schemes,
                                    const SweepOptions& opts) {
    if (opts.trials <= 0) throw std::invalid_argument("trials must be positive");
    if (opts.h_a == cplx{0.0, 0.0}) throw std::invalid_argument("h_a must be nonzero");

    cplx z = opts.h_b / opts.h_a;
    std::vector<const Clustering*> maps;
    maps.reserve(schemes.size());
    for (const auto& s : schemes) {
        if (s.fixed) {
            maps.push_back(s.fixed);
        } else if (s.book) {
            int pick = select_map(cfg, s.book->clusterings, z);
            maps.push_back(&s.book->clusterings[pick]);
        } else {
            throw std::invalid_argument("scheme '" + s.name + "' has no map source");
        }
    }

    std::vector<SerPoint> out;
    for (std::size_t si = 0; si < opts.snr_db.size(); ++si) {
        double sigma = std::sqrt(std::pow(10.0, -opts.snr_db[si] / 10.0));
        std::vector<long long> errors(schemes.size(), 0);
        long long blocks = (opts.trials + kBlockTrials - 1) / kBlockTrials;
        for (long long blk = 0; blk < blocks; ++blk) {
            BlockRng rng(opts.seed, si, static_cast<std::uint64_t>(blk));
            long long lo = blk * kBlockTrials;
            long long hi = std::min(opts.trials, lo + kBlockTrials);
            for (long long tr = lo; tr < hi; ++tr) {
                int a = rng.uniform_int(cfg.m);
                int b = rng.uniform_int(cfg.m);
                cplx n_r = rng.gaussian_cplx(sigma);
                cplx n_a = rng.gaussian_cplx(sigma);
                cplx n_b = rng.gaussian_cplx(sigma);
                for (std::size_t k = 0; k < schemes.size(); ++k) {
                    ExchangeOutcome r = run_exchange(cfg, *maps[k], opts.h_a, opts.h_b,
                                                     opts.h_prime, a, b, n_r, n_a, n_b);
                    if (r.at_a.status != DecodeStatus::ok || r.at_a.symbol != b) ++errors[k];
                    if (r.at_b.status != DecodeStatus::ok || r.at_b.symbol != a) ++errors[k];
                }
            }
        }
        for (std::size_t k = 0; k < schemes.size(); ++k) {
            SerPoint p;
            p.snr_db = opts.snr_db[si];
            p.scheme = schemes[k].name;
            p.trials = opts.trials;
            p.errors = errors[k];
            p.ser = static_cast<double>(errors[k]) / (2.0 * static_cast<double>(opts.trials));
            out.push_back(std::move(p));
        }
    }
    return out;
}

void write_ser_csv(std::ostream& out, const std::vector<SerPoint>& points) {
    out << "snr_db,scheme,trials,errors,ser\n";
    char buf[64];
    for (const auto& p : points) {
        std::snprintf(buf, sizeof(buf), "%.9g", p.snr_db);
        out << buf << ',' << p.scheme << ',' << p.trials << ',' << p.errors << ',';
        std::snprintf(buf, sizeof(buf), "%.9g", p.ser);
        out << buf << '\n';
    }
}

std::vector<SerPoint> parse_ser_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line) || line != "snr_db,scheme,trials,errors,ser")
        throw std::runtime_error("bad SER csv header");
    std::vector<SerPoint> out;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        SerPoint p;
        std::size_t c1 = line.find(',');
        std::size_t c2 = line.find(',', c1 + 1);
        if (c1 == std::string::npos || c2 == std::string::npos)
            throw std::runtime_error("bad SER csv row: " + line);
        p.snr_db = std::stod(line.substr(0, c1));
        p.scheme = line.substr(c1 + 1, c2 - c1 - 1);
        if (std::sscanf(line.c_str() + c2 + 1, "%lld,%lld,%lf", &p.trials, &p.errors, &p.ser) != 3)
            throw std::runtime_error("bad SER csv row: " + line);
        out.push_back(std::move(p));
    }
    return out;
}

}  // namespace relaymap
