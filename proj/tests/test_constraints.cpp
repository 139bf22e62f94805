#include <algorithm>
#include <set>

#include <doctest.h>

#include "fixtures.hpp"
#include "relaymap/constellation.hpp"
#include "relaymap/constraints.hpp"

using namespace relaymap;

namespace {

std::set<std::vector<Cell>> as_set(const std::vector<std::vector<Cell>>& groups) {
    std::set<std::vector<Cell>> out;
    for (auto g : groups) {
        std::sort(g.begin(), g.end());
        out.insert(std::move(g));
    }
    return out;
}

// Independent oracle: group cells by equality of their effective points at the
// exact fade value (connected components of the collision relation), keeping
// only non-singleton components.
std::vector<std::vector<Cell>> collision_components(const PskConfig& cfg, cplx z) {
    auto pts = psk_points(cfg);
    int n = cfg.m * cfg.m;
    std::vector<int> parent(n);
    for (int i = 0; i < n; ++i) parent[i] = i;
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            cplx pi = pts[i / cfg.m] + z * pts[i % cfg.m];
            cplx pj = pts[j / cfg.m] + z * pts[j % cfg.m];
            if (std::abs(pi - pj) < 1e-9) parent[find(i)] = find(j);
        }
    std::vector<std::vector<Cell>> comps(n);
    for (int i = 0; i < n; ++i) comps[find(i)].push_back({i / cfg.m, i % cfg.m});
    std::vector<std::vector<Cell>> out;
    for (auto& c : comps)
        if (c.size() > 1) {
            std::sort(c.begin(), c.end());
            out.push_back(std::move(c));
        }
    return out;
}

}  // namespace

TEST_CASE("printed 4-PSK constraint lists are reproduced exactly") {
    PskConfig cfg = PskConfig::of(4);
    CHECK(as_set(generate_constraints(cfg, make_fade(cfg, 1, 1, 0)).groups) ==
          as_set(fixtures::kQ_1_1_0));
    CHECK(as_set(generate_constraints(cfg, make_fade(cfg, 1, 1, 1)).groups) ==
          as_set(fixtures::kQ_1_1_1));
    CHECK(as_set(generate_constraints(cfg, make_fade(cfg, 1, 2, 0)).groups) ==
          as_set(fixtures::kQ_1_2_0));
    CHECK(as_set(generate_constraints(cfg, make_fade(cfg, 2, 1, 0)).groups) ==
          as_set(fixtures::kQ_2_1_0));
}

TEST_CASE("printed 8-PSK constraint lists are reproduced exactly") {
    PskConfig cfg = PskConfig::of(8);
    CHECK(as_set(generate_constraints(cfg, make_fade(cfg, 1, 1, 0)).groups) ==
          as_set(fixtures::k8_1_1_0));
    CHECK(as_set(generate_constraints(cfg, make_fade(cfg, 1, 3, 0)).groups) ==
          as_set(fixtures::k8_1_3_0));
    CHECK(as_set(generate_constraints(cfg, make_fade(cfg, 1, 3, 1)).groups) ==
          as_set(fixtures::k8_1_3_1));
    CHECK(as_set(generate_constraints(cfg, make_fade(cfg, 2, 4, 0)).groups) ==
          as_set(fixtures::k8_2_4_0));
}

TEST_CASE("generated groups equal collision components for every fade") {
    for (int m : {2, 4, 8}) {
        PskConfig cfg = PskConfig::of(m);
        for (const auto& f : enumerate_singular_fades(cfg)) {
            auto gen = as_set(generate_constraints(cfg, f).groups);
            auto oracle = as_set(collision_components(cfg, fade_value(cfg, f)));
            CHECK(gen == oracle);
        }
    }
}

TEST_CASE("unit-circle group counts follow the closed form") {
    for (int m : {4, 8, 16}) {
        PskConfig cfg = PskConfig::of(m);
        auto cs = generate_constraints(cfg, make_fade(cfg, 1, 1, 0));
        CHECK(cs.groups.size() == static_cast<std::size_t>(m * (m - 2) / 2 + 1));
    }
}

TEST_CASE("pairing the two families yields M groups of four") {
    PskConfig cfg = PskConfig::of(8);
    SingularFade f = make_fade(cfg, 1, 3, 0);
    auto combined = combine_constraints(cfg, generate_constraints(cfg, f));
    CHECK(combined.groups.size() == 8);
    for (const auto& g : combined.groups) CHECK(g.size() == 4);
    // pairing merges each group with its (+M/2, +M/2) translate
    for (const auto& g : combined.groups)
        for (const Cell& c : g) {
            Cell tr{mod(c.r + 4, 8), mod(c.c + 4, 8)};
            CHECK(std::find(g.begin(), g.end(), tr) != g.end());
        }
    CHECK_THROWS(combine_constraints(cfg, generate_constraints(cfg, make_fade(cfg, 2, 4, 0))));
    CHECK_THROWS(combine_constraints(cfg, generate_constraints(cfg, make_fade(cfg, 1, 1, 0))));
}

TEST_CASE("cpls prefilling matches plex structure and stays exclusive-law clean") {
    PskConfig cfg = PskConfig::of(8);
    // paired case: 4-plex
    Cpls four = build_cpls(cfg, combine_constraints(cfg, generate_constraints(
                                    cfg, make_fade(cfg, 1, 3, 0))));
    CHECK(four.n == 8);
    CHECK(four.plex_degree == 4);
    CHECK(four.symbol_count == 8);
    CHECK(four.grid.filled() == 32);
    CHECK(check_exclusive_law(four.grid));
    // M/2 case: families coincide, 2-plex
    Cpls two = build_cpls(cfg, generate_constraints(cfg, make_fade(cfg, 2, 4, 0)));
    CHECK(two.plex_degree == 2);
    CHECK(two.symbol_count == 8);
    CHECK(two.grid.filled() == 16);
}

TEST_CASE("the 4-PSK partial square from the inside-circle fade matches the figure") {
    PskConfig cfg = PskConfig::of(4);
    Cpls cpls = build_cpls(cfg, generate_constraints(cfg, make_fade(cfg, 1, 2, 0)));
    // same partition of cells into groups as the printed partial square
    GridMap expect = GridMap::from_rows(fixtures::kParfil1, 4);
    CHECK(to_clustering(cpls.grid) == to_clustering(expect));
}
