#pragma once

#include <cstdint>
#include <vector>

#include "relaymap/constraints.hpp"
#include "relaymap/latin.hpp"

namespace relaymap {

enum class SolveStatus {
    complete,      // search space exhausted, all completions at t_min found
    solution_cap,  // stopped after max_solutions completions
    node_budget,   // stopped on the node budget; results may be partial
    infeasible,    // no completion at any t <= t_max
};

struct SolveOptions {
    int t_max = 0;  // 0: defaults to n + 2
    bool enumerate_all = true;
    std::uint64_t max_solutions = 10000;
    std::uint64_t node_budget = 100000000;
};

// Completions are enumerated canonically: symbols appear in first-use order, so each
// returned square represents one distinct cell partition (clustering). The number of
// literally-labeled squares at t = t_min is squares.size() * t_min!.
struct CompletionResult {
    int t_min = -1;
    std::vector<GridMap> squares;
    std::uint64_t nodes = 0;
    SolveStatus status = SolveStatus::infeasible;
};

// Finds the smallest t in n..t_max admitting a completion where every constraint
// group takes a single symbol, and enumerates completions at that t.
CompletionResult complete_min_symbols(const Cpls& cpls, SolveOptions opts = {});

// First-solution feasibility probe at a fixed t. Throws if the node budget is
// exhausted before an answer is known.
bool is_completable(const Cpls& cpls, int t, std::uint64_t node_budget = 100000000);

std::string to_string(SolveStatus s);

}  // namespace relaymap
