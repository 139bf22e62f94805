#include "relaymap/completion.hpp"

#include <algorithm>
#include <bit>

namespace relaymap {

namespace {

constexpr int kMaxSymbols = 64;  // row/column symbol sets are single-word bitmasks

// One decision variable: a constraint group (all cells share the symbol) or a lone
// free cell.
struct Var {
    std::vector<Cell> cells;
};

struct Searcher {
    int n = 0, t = 0;
    std::vector<Var> vars;
    std::vector<std::uint64_t> row_mask, col_mask;
    std::vector<int> sym_use;
    std::uint64_t used_mask = 0;
    std::vector<int> assigned;  // symbol per var, -1 if open

    std::uint64_t nodes = 0, node_budget = 0, max_solutions = 0;
    bool enumerate_all = true;
    bool budget_hit = false, cap_hit = false;
    std::vector<GridMap> solutions;
    std::string provenance;

    std::uint64_t full_mask() const {
        return t >= 64 ? ~0ull : ((1ull << t) - 1);
    }

    std::uint64_t domain(const Var& v) const {
        std::uint64_t used = 0;
        for (const auto& c : v.cells) used |= row_mask[c.r] | col_mask[c.c];
        return ~used & full_mask();
    }

    void apply(const Var& v, int s, bool on) {
        std::uint64_t bit = 1ull << s;
        for (const auto& c : v.cells) {
            if (on) {
                row_mask[c.r] |= bit;
                col_mask[c.c] |= bit;
            } else {
                row_mask[c.r] &= ~bit;
                col_mask[c.c] &= ~bit;
            }
        }
        if (on) {
            if (sym_use[s]++ == 0) used_mask |= bit;
        } else {
            if (--sym_use[s] == 0) used_mask &= ~bit;
        }
    }

    void record() {
        GridMap g(n, n, t);
        for (std::size_t i = 0; i < vars.size(); ++i)
            for (const auto& c : vars[i].cells) g.set(c.r, c.c, assigned[i]);
        g.provenance = provenance;
        solutions.push_back(std::move(g));
        if (solutions.size() >= max_solutions) cap_hit = true;
    }

    // Returns true when the search should unwind entirely (budget/cap).
    bool dfs() {
        int best = -1, best_size = kMaxSymbols + 1;
        for (std::size_t i = 0; i < vars.size(); ++i) {
            if (assigned[i] >= 0) continue;
            int size = std::popcount(domain(vars[i]));
            if (size == 0) return false;  // dead end
            if (size < best_size) {
                best_size = size;
                best = static_cast<int>(i);
                if (size == 1) break;
            }
        }
        if (best < 0) {
            record();
            return cap_hit || !enumerate_all;
        }
        // Symbols already in use plus the single lowest unused one: enumerates each
        // cell partition exactly once, independent of the dynamic variable order.
        std::uint64_t lowest_unused = ~used_mask & full_mask();
        lowest_unused &= lowest_unused == 0 ? 0 : (~lowest_unused + 1);
        std::uint64_t dom = domain(vars[best]) & (used_mask | lowest_unused);
        while (dom != 0) {
            int s = std::countr_zero(dom);
            dom &= dom - 1;
            if (++nodes > node_budget) {
                budget_hit = true;
                return true;
            }
            assigned[best] = s;
            apply(vars[best], s, true);
            bool stop = dfs();
            apply(vars[best], s, false);
            assigned[best] = -1;
            if (stop) return true;
        }
        return false;
    }
};

Searcher make_searcher(const Cpls& cpls, int t) {
    if (t > kMaxSymbols) throw std::invalid_argument("symbol alphabets beyond 64 unsupported");
    Searcher s;
    s.n = cpls.n;
    s.t = t;
    s.row_mask.assign(cpls.n, 0);
    s.col_mask.assign(cpls.n, 0);
    s.sym_use.assign(t, 0);

    std::vector<char> in_group(static_cast<std::size_t>(cpls.n) * cpls.n, 0);
    for (const auto& g : cpls.groups) {
        Var v;
        v.cells = g;
        for (const auto& c : g) in_group[static_cast<std::size_t>(c.r) * cpls.n + c.c] = 1;
        s.vars.push_back(std::move(v));
    }
    for (int i = 0; i < cpls.n; ++i)
        for (int j = 0; j < cpls.n; ++j)
            if (!in_group[static_cast<std::size_t>(i) * cpls.n + j]) s.vars.push_back({{{i, j}}});
    std::sort(s.vars.begin(), s.vars.end(),
              [](const Var& a, const Var& b) { return a.cells.front() < b.cells.front(); });
    s.assigned.assign(s.vars.size(), -1);
    return s;
}

}  // namespace

CompletionResult complete_min_symbols(const Cpls& cpls, SolveOptions opts) {
    int t_max = opts.t_max > 0 ? opts.t_max : cpls.n + 2;
    if (t_max < cpls.n) throw std::invalid_argument("t_max below the order");

    CompletionResult res;
    for (int t = cpls.n; t <= t_max; ++t) {
        Searcher s = make_searcher(cpls, t);
        s.node_budget = opts.node_budget;
        s.max_solutions = opts.max_solutions;
        s.enumerate_all = opts.enumerate_all;
        s.provenance = "complete(t=" + std::to_string(t) + "):" + cpls.grid.provenance;
        s.dfs();
        res.nodes += s.nodes;
        if (!s.solutions.empty()) {
            res.t_min = t;
            res.squares = std::move(s.solutions);
            res.status = s.budget_hit  ? SolveStatus::node_budget
                         : s.cap_hit   ? SolveStatus::solution_cap
                                       : SolveStatus::complete;
            return res;
        }
        if (s.budget_hit) {
            res.status = SolveStatus::node_budget;
            return res;
        }
    }
    res.status = SolveStatus::infeasible;
    return res;
}

bool is_completable(const Cpls& cpls, int t, std::uint64_t node_budget) {
    if (t < cpls.n) return false;
    Searcher s = make_searcher(cpls, t);
    s.node_budget = node_budget;
    s.max_solutions = 1;
    s.enumerate_all = false;
    s.provenance = "probe";
    s.dfs();
    if (s.solutions.empty() && s.budget_hit)
        throw std::runtime_error("node budget exhausted before feasibility was decided");
    return !s.solutions.empty();
}

std::string to_string(SolveStatus s) {
    switch (s) {
        case SolveStatus::complete: return "complete";
        case SolveStatus::solution_cap: return "solution-cap";
        case SolveStatus::node_budget: return "node-budget";
        case SolveStatus::infeasible: return "infeasible";
    }
    return "?";
}

}  // namespace relaymap
