#include "relaymap/constructions.hpp"

#include <algorithm>
#include <set>

#include "relaymap/metrics.hpp"

namespace relaymap {

GridMap construct_odd_pair(const PskConfig& cfg, int k, int l, OddVariant v) {
    const int M = cfg.m;
    if (k < 1 || k >= M || l < 1 || l >= M) throw std::invalid_argument("k, l must lie in 1..M-1");
    if (k % 2 == 0 || l % 2 == 0) throw std::invalid_argument("k, l must be odd");

    GridMap g(M, M, M);
    auto place = [&](int r, int c, int s) {
        if (g.has(r, c)) {
            if (g.at(r, c) != s) throw std::logic_error("walk construction is inconsistent");
            return;
        }
        g.set(r, c, s);
    };
    for (int s = 0; s < M; ++s) place(0, s, s);
    for (int s = 0; s < M; ++s) {
        bool forward = (s % 2 == 0) == (v == OddVariant::even_start);
        for (int t = 1; t <= M; ++t)
            place(mod(k * t, M), mod(s + (forward ? l * t : -l * t), M), s);
    }
    if (!g.complete() || !check_exclusive_law(g))
        throw std::logic_error("walk construction did not yield a Latin square");
    g.provenance = std::string("odd-pair(") + std::to_string(k) + "," + std::to_string(l) + "," +
                   (v == OddVariant::even_start ? "e" : "o") + ")";
    return g;
}

namespace {

int fold_ring(int x, int M) {
    x = mod(x, M);
    return std::min(x, M - x);
}

}  // namespace

OddPairRemoval removed_fades_of_odd_pair(const PskConfig& cfg, int k, int l) {
    const int M = cfg.m;
    if (mod(k - l, M) == 0 || mod(k + l, M) == 0)
        throw std::invalid_argument(
            "l = +-k (mod M): the walk circles all collapse onto the unit circle, "
            "where the variant split does not hold");
    auto cl_e = to_clustering(construct_odd_pair(cfg, k, l, OddVariant::even_start));
    auto cl_o = to_clustering(construct_odd_pair(cfg, k, l, OddVariant::odd_start));

    std::set<std::pair<int, int>> circles;
    for (int n = 1; n <= M / 2 - 1; n += 2) circles.insert({fold_ring(n * k, M), fold_ring(n * l, M)});

    OddPairRemoval out;
    for (const auto& [a, b] : circles)
        for (int m = 0; m < M; ++m) {
            SingularFade f = make_fade(cfg, a, b, m);
            bool by_e = removes(cfg, cl_e, f);
            bool by_o = removes(cfg, cl_o, f);
            if (by_e == by_o) throw std::logic_error("variants must split the circle fades");
            (by_e ? out.even_variant : out.odd_variant).push_back(f);
        }
    return out;
}

bool lift_uses_diagonal_blocks(int k, int l) {
    return ((k / 2 - l / 2) % 2) == 0;
}

GridMap lift_quadruplicate(const GridMap& base, int k, int l) {
    const int n = base.rows();
    const int M = 2 * n;
    if (base.cols() != n || !base.complete()) throw std::invalid_argument("base must be a complete square");
    if (!check_exclusive_law(base) || base.t() != n)
        throw std::invalid_argument("base must be Latin on n symbols");
    if (k % 2 != 0 || l % 2 != 0 || k == l || k == n || l == n || k < 1 || k >= M || l < 1 || l >= M)
        throw std::invalid_argument("lift needs even k != l, both different from M/2");

    const bool diagonal = lift_uses_diagonal_blocks(k, l);
    GridMap eo_block = diagonal ? base : cyclic_column_shift(base, 1);

    GridMap out(M, M, M);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (diagonal) {
                // constrained blocks on matching row/column parity
                out.set(2 * i, 2 * j, base.at(i, j));
                out.set(2 * i + 1, 2 * j + 1, base.at(i, j));
                out.set(2 * i, 2 * j + 1, base.at(i, j) + n);
                out.set(2 * i + 1, 2 * j, base.at(i, j) + n);
            } else {
                // constrained blocks on mixed parity: odd-row/even-col holds the base,
                // even-row/odd-col its one-column shift
                out.set(2 * i + 1, 2 * j, base.at(i, j));
                out.set(2 * i, 2 * j + 1, eo_block.at(i, j));
                out.set(2 * i, 2 * j, base.at(i, j) + n);
                out.set(2 * i + 1, 2 * j + 1, base.at(i, j) + n);
            }
        }
    out.provenance = "lift(" + std::to_string(k) + "," + std::to_string(l) + "):" + base.provenance;
    return out;
}

}  // namespace relaymap
