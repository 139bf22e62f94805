#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "relaymap/completion.hpp"
#include "relaymap/constraints.hpp"
#include "relaymap/fades.hpp"
#include "relaymap/latin.hpp"

namespace relaymap {

// How a fade's grid is rebuilt: seed square, then column shift, then transpose.
struct Provenance {
    int seed = -1;
    int shift = 0;
    bool transposed = false;
};

struct BookEntry {
    SingularFade fade;
    int clustering = -1;
    Provenance prov;
};

struct SeedRecord {
    std::string name;
    GridMap grid;
};

struct AssembleOptions {
    std::uint64_t max_solutions = 10000;
    std::uint64_t node_budget = 100000000;
    int t_max = 0;  // 0: M + 2
};

// One clustering per singular fade, every fade covered, with shift/transpose
// provenance back to a small set of seed squares.
struct MapBook {
    PskConfig cfg;
    std::vector<SeedRecord> seeds;
    std::vector<Clustering> clusterings;     // deduped, indexed by BookEntry::clustering
    std::vector<GridMap> representatives;    // one grid per clustering
    std::vector<BookEntry> assignment;       // in enumerate_singular_fades order
    std::vector<std::string> issues;         // solver cap notes etc.
    bool complete = true;

    const BookEntry* find(const SingularFade& f) const;
    GridMap replay(const Provenance& p) const;
    GridMap grid_for(const SingularFade& f) const;
};

MapBook assemble(const PskConfig& cfg, const AssembleOptions& opts = {});

struct VerifyReport {
    bool ok = true;
    int checked = 0;
    std::vector<std::string> failures;
};

// Replays every entry and checks the exclusive law, clustering match, and exact
// fade removal.
VerifyReport verify(const MapBook& book);

// Closed-form seed accounting (valid for M >= 8).
struct SeedCounts {
    int constructed = 0;      // seeds not coming from the completion solver
    int circles_covered = 0;  // circles whose fades those seeds serve (both orientations)
    int total = 0;            // all seeds
};

SeedCounts seed_count_report(const PskConfig& cfg);

// The same tallies taken from an assembled book, for cross-checking.
SeedCounts count_seeds(const MapBook& book);

}  // namespace relaymap
