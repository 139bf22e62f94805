#include "relaymap/constraints.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace relaymap {

namespace {

// Union groups that share a cell, drop duplicates, and return them sorted.
std::vector<std::vector<Cell>> normalize_groups(std::vector<std::vector<Cell>> raw) {
    for (auto& g : raw) {
        std::sort(g.begin(), g.end());
        g.erase(std::unique(g.begin(), g.end()), g.end());
    }
    std::sort(raw.begin(), raw.end());
    raw.erase(std::unique(raw.begin(), raw.end()), raw.end());

    std::vector<int> parent(raw.size());
    for (std::size_t i = 0; i < raw.size(); ++i) parent[i] = static_cast<int>(i);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    std::map<Cell, int> owner;
    for (std::size_t i = 0; i < raw.size(); ++i)
        for (const auto& cell : raw[i]) {
            auto [it, fresh] = owner.emplace(cell, static_cast<int>(i));
            if (!fresh) {
                int a = find(it->second), b = find(static_cast<int>(i));
                if (a != b) parent[a] = b;
            }
        }
    std::map<int, std::vector<Cell>> merged;
    for (std::size_t i = 0; i < raw.size(); ++i) {
        auto& dst = merged[find(static_cast<int>(i))];
        dst.insert(dst.end(), raw[i].begin(), raw[i].end());
    }
    std::vector<std::vector<Cell>> out;
    out.reserve(merged.size());
    for (auto& [root, cells] : merged) {
        std::sort(cells.begin(), cells.end());
        cells.erase(std::unique(cells.begin(), cells.end()), cells.end());
        out.push_back(std::move(cells));
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

ConstraintSet generate_constraints(const PskConfig& cfg, const SingularFade& f) {
    const int M = cfg.m;
    std::vector<std::vector<Cell>> raw;

    if (f.k1 == f.k2) {
        // Unit circle, theta = 2m*pi/M. One length-M chain plus shifted symmetric pairs;
        // pairs whose partners land on the chain are already absorbed by it.
        std::vector<Cell> chain;
        for (int l = 0; l < M; ++l) chain.push_back({mod(l + f.m + M / 2, M), l});
        raw.push_back(std::move(chain));
        for (int a = 0; a < M; ++a)
            for (int b = a + 1; b < M; ++b) {
                if (mod(b - a, M) == M / 2) continue;
                raw.push_back({{a, mod(b - f.m, M)}, {b, mod(a - f.m, M)}});
            }
    } else {
        const int k = f.k1, l = f.k2, m = f.m;
        // Both constraint families; for offset fades the column displacements use
        // k+1 in place of k. Families coincide when k or l equals M/2.
        int dk = (f.cls == PhaseClass::aligned) ? k : k + 1;
        if ((dk - l) % 2 != 0) throw std::logic_error("phase class inconsistent with parity");
        const int d1 = (dk - l) / 2, d2 = (dk + l) / 2;
        for (int i = 0; i < M; ++i) {
            raw.push_back({{i, mod(i - m - M / 2 - d1, M)}, {mod(i - k, M), mod(i - m + M / 2 - d2, M)}});
            raw.push_back({{i, mod(i - m - d2, M)}, {mod(i - k, M), mod(i - m - d1, M)}});
        }
    }

    ConstraintSet cs;
    cs.fade = f;
    cs.groups = normalize_groups(std::move(raw));
    return cs;
}

ConstraintSet combine_constraints(const PskConfig& cfg, const ConstraintSet& cs) {
    const int M = cfg.m;
    const auto& f = cs.fade;
    if (f.k1 == f.k2 || f.k1 == M / 2 || f.k2 == M / 2)
        throw std::invalid_argument("combining requires k1 != k2 and k1, k2 != M/2");

    std::map<std::vector<Cell>, int> idx;
    for (std::size_t i = 0; i < cs.groups.size(); ++i)
        idx.emplace(cs.groups[i], static_cast<int>(i));

    std::vector<std::vector<Cell>> raw = cs.groups;
    for (const auto& g : cs.groups) {
        std::vector<Cell> shifted;
        shifted.reserve(g.size() * 2);
        shifted = g;
        for (const auto& cell : g) shifted.push_back({mod(cell.r + M / 2, M), mod(cell.c + M / 2, M)});
        raw.push_back(std::move(shifted));
    }
    ConstraintSet out;
    out.fade = f;
    out.groups = normalize_groups(std::move(raw));
    if (out.groups.size() != static_cast<std::size_t>(M))
        throw std::logic_error("combining did not yield M groups");
    return out;
}

Cpls build_cpls(const PskConfig& cfg, const ConstraintSet& cs) {
    const int M = cfg.m;
    Cpls p;
    p.n = M;
    p.groups = cs.groups;
    p.symbol_count = static_cast<int>(cs.groups.size());
    p.grid = GridMap(M, M, std::max(p.symbol_count, M));
    for (std::size_t s = 0; s < cs.groups.size(); ++s)
        for (const auto& cell : cs.groups[s]) {
            if (p.grid.has(cell.r, cell.c)) throw std::invalid_argument("overlapping groups");
            p.grid.set(cell.r, cell.c, static_cast<int>(s));
        }
    if (!check_exclusive_law(p.grid))
        throw std::invalid_argument("constraint groups violate the exclusive law");

    std::vector<int> per_row(M, 0), per_col(M, 0);
    for (const auto& g : cs.groups)
        for (const auto& cell : g) {
            ++per_row[cell.r];
            ++per_col[cell.c];
        }
    p.plex_degree = per_row[0];
    for (int i = 0; i < M; ++i)
        if (per_row[i] != p.plex_degree || per_col[i] != p.plex_degree)
            throw std::invalid_argument("constraints do not form a uniform plex");
    p.grid.provenance = "cpls" + fade_label(cs.fade);
    return p;
}

}  // namespace relaymap
