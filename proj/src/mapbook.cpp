#include "relaymap/mapbook.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

#include "relaymap/constructions.hpp"
#include "relaymap/metrics.hpp"

namespace relaymap {

namespace {

int fold_ring(int x, int M) {
    x = mod(x, M);
    return std::min(x, M - x);
}

// Relabels cells one step along the main diagonal: out(i, j) = in(i-1, j-1).
GridMap diagonal_translate(const GridMap& g) {
    GridMap out(g.rows(), g.cols(), g.t());
    for (int i = 0; i < g.rows(); ++i)
        for (int j = 0; j < g.cols(); ++j)
            out.set(i, j, g.at(mod(i - 1, g.rows()), mod(j - 1, g.cols())));
    return out;
}

// A seed whose clustering survives diagonal translation keeps the whole circle pair
// coherent: column shifts along the transposed circle then land on the same
// clusterings as per-fade transposes, so both derivations agree everywhere.
bool diagonally_invariant(const GridMap& g, const Clustering& cl) {
    return to_clustering(diagonal_translate(g)) == cl;
}

struct Builder {
    const PskConfig& cfg;
    const AssembleOptions& opts;
    MapBook book;
    std::map<std::string, int> cluster_index;
    std::map<SingularFade, BookEntry> entries;
    std::map<std::pair<int, int>, int> odd_seed;  // inside odd circle -> seed id

    explicit Builder(const PskConfig& c, const AssembleOptions& o) : cfg(c), opts(o) {
        book.cfg = c;
    }

    int add_seed(std::string name, GridMap grid) {
        book.seeds.push_back({std::move(name), std::move(grid)});
        return static_cast<int>(book.seeds.size()) - 1;
    }

    int add_clustering(const GridMap& grid) {
        Clustering c = to_clustering(grid);
        auto [it, fresh] =
            cluster_index.emplace(c.canonical_key(), static_cast<int>(book.clusterings.size()));
        if (fresh) {
            book.clusterings.push_back(std::move(c));
            book.representatives.push_back(grid);
        }
        return it->second;
    }

    void assign(const SingularFade& f, const GridMap& grid, Provenance prov) {
        entries[f] = BookEntry{f, add_clustering(grid), prov};
    }

    // Derives all M fades of circle (k1, k2) by column shifts of the seed, and the
    // reciprocal circle (k2, k1) by transposes, keeping both coherent by construction.
    void cover_circle(int k1, int k2, int seed_id, int m0) {
        const GridMap& seed = book.seeds[seed_id].grid;
        for (int m = 0; m < cfg.m; ++m) {
            int s = mod(m - m0, cfg.m);
            GridMap g = cyclic_column_shift(seed, s);
            SingularFade f = make_fade(cfg, k1, k2, m);
            assign(f, g, {seed_id, s, false});
            if (k1 != k2) {
                SingularFade r = reciprocal_fade(cfg, f);
                assign(r, transpose(g), {seed_id, s, true});
            }
        }
    }

    void build_unit_circle() {
        int id = add_seed("xor", xor_square(cfg));
        cover_circle(1, 1, id, 0);
    }

    // Inside circles a walk seed reaches: (fold(n k1), fold(n k2)), n odd.
    std::vector<std::pair<int, int>> odd_class_circles(int k1, int k2) const {
        std::vector<std::pair<int, int>> out;
        for (int n = 1; n <= cfg.m / 2 - 1; n += 2) {
            int a = fold_ring(n * k1, cfg.m), b = fold_ring(n * k2, cfg.m);
            if (a < b) out.emplace_back(a, b);
        }
        return out;
    }

    int first_removed_phase(const Clustering& cl, int k1, int k2) const {
        for (int m = 0; m < cfg.m; ++m)
            if (removes(cfg, cl, make_fade(cfg, k1, k2, m))) return m;
        return -1;
    }

    void build_odd_circle(int k1, int k2) {
        auto key = std::make_pair(k1, k2);
        if (!odd_seed.count(key)) {
            auto circles = odd_class_circles(k1, k2);
            GridMap seed(1, 1, 1);
            bool found = false;
            for (OddVariant v : {OddVariant::even_start, OddVariant::odd_start}) {
                GridMap cand = construct_odd_pair(cfg, k1, k2, v);
                Clustering cl = to_clustering(cand);
                bool all = true;
                for (auto [a, b] : circles)
                    if (first_removed_phase(cl, a, b) < 0) {
                        all = false;
                        break;
                    }
                if (all) {
                    seed = std::move(cand);
                    found = true;
                    break;
                }
            }
            if (!found)
                throw std::logic_error("no walk variant covers every circle of its class");
            int id = add_seed("odd-pair(" + std::to_string(k1) + "," + std::to_string(k2) + ")",
                              std::move(seed));
            for (auto [a, b] : circles) odd_seed.emplace(std::make_pair(a, b), id);
        }
        int id = odd_seed[key];
        int m0 = first_removed_phase(to_clustering(book.seeds[id].grid), k1, k2);
        if (m0 < 0) throw std::logic_error("odd-pair seed removes nothing on its circle");
        cover_circle(k1, k2, id, m0);
    }

    void build_lifted_circle(int k1, int k2, const MapBook& sub) {
        const int n = cfg.m / 2;
        const int K = k1 / 2, L = k2 / 2;
        SingularFade base_fade = lift_uses_diagonal_blocks(k1, k2)
                                     ? make_fade(sub.cfg, K, L, 0)
                                     : make_fade(sub.cfg, K, L, n - 1);
        GridMap base = sub.grid_for(base_fade);
        GridMap seed = lift_quadruplicate(base, k1, k2);
        int id = add_seed("lift(" + std::to_string(k1) + "," + std::to_string(k2) + ")",
                          std::move(seed));
        cover_circle(k1, k2, id, 0);
    }

    void build_solved_circle(int k1, int k2) {
        SingularFade rep = make_fade(cfg, k1, k2, 0);
        ConstraintSet cs = generate_constraints(cfg, rep);
        if (k1 != cfg.m / 2 && k2 != cfg.m / 2) cs = combine_constraints(cfg, cs);
        Cpls cpls = build_cpls(cfg, cs);

        SolveOptions sopts;
        sopts.t_max = opts.t_max > 0 ? opts.t_max : cfg.m + 2;
        sopts.enumerate_all = true;
        sopts.max_solutions = opts.max_solutions;
        sopts.node_budget = opts.node_budget;
        CompletionResult res = complete_min_symbols(cpls, sopts);
        std::string label = "circle(" + std::to_string(k1) + "," + std::to_string(k2) + ")";
        if (res.t_min < 0) {
            book.complete = false;
            book.issues.push_back(label + ": no completion, status " + to_string(res.status));
            return;
        }
        if (res.status != SolveStatus::complete)
            book.issues.push_back(label + ": completion search stopped on " +
                                  to_string(res.status));

        // Prefer completions that stay coherent under diagonal translation, then ones
        // whose clustering the book already holds, then the canonically smallest key.
        const GridMap* best = nullptr;
        std::string best_key;
        bool best_in_book = false, best_inv = false;
        for (const auto& sq : res.squares) {
            Clustering c = to_clustering(sq);
            bool inv = diagonally_invariant(sq, c);
            bool in_book = cluster_index.count(c.canonical_key()) > 0;
            auto rank = std::make_tuple(!inv, !in_book, c.canonical_key());
            if (best == nullptr ||
                rank < std::make_tuple(!best_inv, !best_in_book, best_key)) {
                best = &sq;
                best_key = c.canonical_key();
                best_in_book = in_book;
                best_inv = inv;
            }
        }
        std::string name = "solve(" + std::to_string(k1) + "," + std::to_string(k2) +
                           ",t=" + std::to_string(res.t_min) + ")";
        GridMap seed = *best;
        seed.provenance = name;
        int id = add_seed(std::move(name), std::move(seed));
        cover_circle(k1, k2, id, 0);
    }

    MapBook run() {
        const int M = cfg.m;
        bool needs_sub = false;
        for (int k1 = 2; k1 < M / 2 && !needs_sub; k1 += 2)
            for (int k2 = k1 + 2; k2 < M / 2 && !needs_sub; k2 += 2) needs_sub = true;
        MapBook sub;
        if (needs_sub) sub = assemble(PskConfig::of(M / 2), opts);

        build_unit_circle();
        for (int k1 = 1; k1 <= M / 2; ++k1)
            for (int k2 = k1 + 1; k2 <= M / 2; ++k2) {
                if (k1 % 2 == 1 && k2 % 2 == 1)
                    build_odd_circle(k1, k2);
                else if (k1 % 2 == 0 && k2 % 2 == 0 && k1 != M / 2 && k2 != M / 2)
                    build_lifted_circle(k1, k2, sub);
                else
                    build_solved_circle(k1, k2);
            }

        for (const auto& f : enumerate_singular_fades(cfg)) {
            auto it = entries.find(f);
            if (it == entries.end()) {
                book.complete = false;
                book.issues.push_back("unassigned fade " + fade_label(f));
                continue;
            }
            book.assignment.push_back(it->second);
        }
        return std::move(book);
    }
};

}  // namespace

const BookEntry* MapBook::find(const SingularFade& f) const {
    for (const auto& e : assignment)
        if (e.fade == f) return &e;
    return nullptr;
}

GridMap MapBook::replay(const Provenance& p) const {
    if (p.seed < 0 || p.seed >= static_cast<int>(seeds.size()))
        throw std::invalid_argument("provenance references unknown seed");
    GridMap g = cyclic_column_shift(seeds[p.seed].grid, p.shift);
    if (p.transposed) g = transpose(g);
    return g;
}

GridMap MapBook::grid_for(const SingularFade& f) const {
    const BookEntry* e = find(f);
    if (!e) throw std::invalid_argument("fade not covered by the book: " + fade_label(f));
    return replay(e->prov);
}

MapBook assemble(const PskConfig& cfg, const AssembleOptions& opts) {
    return Builder(cfg, opts).run();
}

VerifyReport verify(const MapBook& book) {
    VerifyReport rep;
    auto fades = enumerate_singular_fades(book.cfg);
    if (fades.size() != book.assignment.size()) {
        rep.ok = false;
        rep.failures.push_back("assignment size mismatch");
    }
    for (std::size_t i = 0; i < book.clusterings.size(); ++i)
        if (!(to_clustering(book.representatives[i]) == book.clusterings[i])) {
            rep.ok = false;
            rep.failures.push_back("representative " + std::to_string(i) + " mismatch");
        }
    for (const auto& e : book.assignment) {
        ++rep.checked;
        GridMap g = book.replay(e.prov);
        std::string label = fade_label(e.fade);
        if (!g.complete() || !check_exclusive_law(g)) {
            rep.ok = false;
            rep.failures.push_back(label + ": replay violates the exclusive law");
            continue;
        }
        if (!(to_clustering(g) == book.clusterings[e.clustering])) {
            rep.ok = false;
            rep.failures.push_back(label + ": provenance does not replay to the clustering");
            continue;
        }
        if (!removes(book.cfg, book.clusterings[e.clustering], e.fade)) {
            rep.ok = false;
            rep.failures.push_back(label + ": assigned clustering does not remove the fade");
        }
    }
    return rep;
}

SeedCounts seed_count_report(const PskConfig& cfg) {
    if (cfg.m < 8) throw std::invalid_argument("closed-form seed counts need M >= 8");
    const int M = cfg.m;
    SeedCounts c;
    c.constructed = M * M / 32 - M / 8 + 1;
    c.circles_covered = M * M / 8 - M + 3;
    c.total = 3 * M * M / 32 + M / 8;
    return c;
}

SeedCounts count_seeds(const MapBook& book) {
    SeedCounts c;
    c.total = static_cast<int>(book.seeds.size());
    std::set<int> constructed_ids;
    for (std::size_t i = 0; i < book.seeds.size(); ++i)
        if (book.seeds[i].name.rfind("solve", 0) != 0) {
            ++c.constructed;
            constructed_ids.insert(static_cast<int>(i));
        }
    std::set<std::pair<int, int>> circles;
    for (const auto& e : book.assignment)
        if (constructed_ids.count(e.prov.seed)) circles.insert({e.fade.k1, e.fade.k2});
    c.circles_covered = static_cast<int>(circles.size());
    return c;
}

}  // namespace relaymap
