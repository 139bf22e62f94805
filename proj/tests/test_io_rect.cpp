#include <algorithm>
#include <stdexcept>

#include <doctest.h>

#include "fixtures.hpp"
#include "relaymap/io.hpp"
#include "relaymap/metrics.hpp"
#include "relaymap/rectangle.hpp"

using namespace relaymap;

TEST_CASE("grid json round trip keeps cells, alphabet, and holes") {
    GridMap g = GridMap::from_rows(fixtures::kParfil1, 4);
    g.provenance = "fixture";
    json j = grid_to_json(g);
    GridMap back = grid_from_json(j);
    CHECK(back == g);
    CHECK(back.provenance == "fixture");
    CHECK_FALSE(back.has(0, 0));
    CHECK(back.at(0, 1) == 0);

    json bad = j;
    bad["cells"].erase(0);
    CHECK_THROWS(grid_from_json(bad));
}

TEST_CASE("fade json round trip and class validation") {
    PskConfig cfg = PskConfig::of(8);
    for (const auto& f : enumerate_singular_fades(cfg)) {
        SingularFade back = fade_from_json(cfg, fade_to_json(f));
        CHECK(back == f);
    }
    json j = fade_to_json(make_fade(cfg, 1, 2, 0));
    j["phase_class"] = "aligned";  // (1,2) is parity-mixed: must be offset
    CHECK_THROWS(fade_from_json(cfg, j));
    j["phase_class"] = "sideways";
    CHECK_THROWS(fade_from_json(cfg, j));
}

TEST_CASE("constraint set json round trip") {
    PskConfig cfg = PskConfig::of(8);
    ConstraintSet cs = generate_constraints(cfg, make_fade(cfg, 1, 3, 0));
    ConstraintSet back = constraints_from_json(cfg, constraints_to_json(cs));
    CHECK(back.fade == cs.fade);
    CHECK(back.groups == cs.groups);
}

TEST_CASE("clustering json round trip preserves the canonical key") {
    Clustering c(fixtures::kC[7]);
    Clustering back = clustering_from_json(clustering_to_json(c));
    CHECK(back == c);
    CHECK(back.blocks() == c.blocks());
}

TEST_CASE("map book json: dump, reload, dump again is byte-identical") {
    PskConfig cfg = PskConfig::of(4);
    MapBook book = assemble(cfg);
    json j = mapbook_to_json(book);
    MapBook back = mapbook_from_json(j);
    CHECK(back.cfg.m == 4);
    CHECK(back.assignment.size() == book.assignment.size());
    CHECK(back.clusterings.size() == book.clusterings.size());
    CHECK(verify(back).ok);
    CHECK(mapbook_to_json(back).dump(2) == j.dump(2));
}

TEST_CASE("map book json rejects dangling clustering indices") {
    PskConfig cfg = PskConfig::of(2);
    json j = mapbook_to_json(assemble(cfg));
    json bad = j;
    bad["assignment"][0]["clustering"] = 7;
    CHECK_THROWS(mapbook_from_json(bad));
    // an extra clustering nobody references cannot be rebuilt either
    bad = j;
    bad["clusterings"].push_back(bad["clusterings"][0]);
    CHECK_THROWS(mapbook_from_json(bad));
}

TEST_CASE("kept columns: spacing, offset, and validation") {
    PskConfig cfg = PskConfig::of(8);
    CHECK(kept_columns(cfg, 4) == std::vector<int>{0, 2, 4, 6});
    CHECK(kept_columns(cfg, 4, 1) == std::vector<int>{1, 3, 5, 7});
    CHECK(kept_columns(cfg, 2) == std::vector<int>{0, 4});
    CHECK(kept_columns(cfg, 8) == std::vector<int>{0, 1, 2, 3, 4, 5, 6, 7});
    CHECK_THROWS(kept_columns(cfg, 3));
    CHECK_THROWS(kept_columns(cfg, 16));
    CHECK_THROWS(kept_columns(cfg, 4, 2));
}

TEST_CASE("rectangle singular fades are a strict subset of the square set") {
    PskConfig cfg = PskConfig::of(8);
    auto keep = kept_columns(cfg, 4);
    auto sub = rectangle_singular_fades(cfg, keep);
    auto all = enumerate_singular_fades(cfg);
    CHECK(!sub.empty());
    CHECK(sub.size() < all.size());
    for (const auto& f : sub)
        CHECK(std::find(all.begin(), all.end(), f) != all.end());
    // B-differences on ring 4 survive deletion, ring 1 cannot
    CHECK(std::find(sub.begin(), sub.end(), make_fade(cfg, 2, 4, 0)) != sub.end());
    CHECK(std::find(sub.begin(), sub.end(), make_fade(cfg, 2, 1, 0)) == sub.end());
}

TEST_CASE("column-deleted fixture still removes its fade as a rectangle") {
    PskConfig cfg = PskConfig::of(8);
    auto keep = kept_columns(cfg, 4);
    GridMap rect = delete_columns(GridMap::from_rows(fixtures::k8L6), keep);
    CHECK(rect == GridMap::from_rows(fixtures::kRect84, 8));
    CHECK(rectangle_removes(cfg, rect, keep, make_fade(cfg, 2, 4, 0)));
    GridMap xr = delete_columns(xor_square(cfg), keep);
    CHECK_FALSE(rectangle_removes(cfg, xr, keep, make_fade(cfg, 2, 4, 0)));
}
