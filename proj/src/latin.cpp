#include "relaymap/latin.hpp"

#include <algorithm>
#include <set>

namespace relaymap {

GridMap::GridMap(int rows, int cols, int t) : rows_(rows), cols_(cols), t_(t) {
    if (rows < 1 || cols < 1 || t < 1) throw std::invalid_argument("bad grid dimensions");
    cells_.assign(static_cast<std::size_t>(rows) * cols, -1);
}

GridMap GridMap::from_rows(const std::vector<std::vector<int>>& rows, int t) {
    if (rows.empty() || rows[0].empty()) throw std::invalid_argument("empty grid");
    int r = static_cast<int>(rows.size());
    int c = static_cast<int>(rows[0].size());
    int maxsym = -1;
    for (const auto& row : rows) {
        if (static_cast<int>(row.size()) != c) throw std::invalid_argument("ragged grid");
        for (int v : row) maxsym = std::max(maxsym, v);
    }
    if (t == -1) t = maxsym + 1;
    GridMap g(r, c, t);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j)
            if (rows[i][j] >= 0) g.set(i, j, rows[i][j]);
    return g;
}

void GridMap::check(int r, int c) const {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
        throw std::out_of_range("grid cell out of range");
}

int GridMap::cell(int r, int c) const {
    check(r, c);
    return cells_[static_cast<std::size_t>(r) * cols_ + c];
}

int GridMap::at(int r, int c) const {
    int v = cell(r, c);
    if (v < 0) throw std::logic_error("cell is empty");
    return v;
}

void GridMap::set(int r, int c, int symbol) {
    check(r, c);
    if (symbol < 0 || symbol >= t_) throw std::invalid_argument("symbol out of alphabet");
    cells_[static_cast<std::size_t>(r) * cols_ + c] = static_cast<int16_t>(symbol);
}

void GridMap::clear_cell(int r, int c) {
    check(r, c);
    cells_[static_cast<std::size_t>(r) * cols_ + c] = -1;
}

std::size_t GridMap::filled() const {
    std::size_t n = 0;
    for (auto v : cells_) n += (v >= 0);
    return n;
}

std::vector<std::vector<int>> GridMap::to_rows() const {
    std::vector<std::vector<int>> rows(rows_, std::vector<int>(cols_, -1));
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) rows[i][j] = cell(i, j);
    return rows;
}

Clustering::Clustering(std::vector<std::vector<Cell>> blocks) : blocks_(std::move(blocks)) {
    for (auto& b : blocks_) {
        if (b.empty()) throw std::invalid_argument("empty cluster block");
        std::sort(b.begin(), b.end());
        b.erase(std::unique(b.begin(), b.end()), b.end());
    }
    std::sort(blocks_.begin(), blocks_.end());
    for (const auto& b : blocks_)
        for (const auto& cell : b) {
            rows_ = std::max(rows_, cell.r + 1);
            cols_ = std::max(cols_, cell.c + 1);
        }
    index_.assign(static_cast<std::size_t>(rows_) * cols_, -1);
    for (std::size_t i = 0; i < blocks_.size(); ++i)
        for (const auto& cell : blocks_[i]) {
            auto& slot = index_[static_cast<std::size_t>(cell.r) * cols_ + cell.c];
            if (slot != -1) throw std::invalid_argument("cell appears in two blocks");
            slot = static_cast<int>(i);
        }
    key_.reserve(blocks_.size() * 8);
    for (const auto& b : blocks_) {
        for (const auto& cell : b) {
            key_ += std::to_string(cell.r);
            key_ += ',';
            key_ += std::to_string(cell.c);
            key_ += ' ';
        }
        key_ += ';';
    }
}

int Clustering::block_of(int r, int c) const {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_) return -1;
    return index_[static_cast<std::size_t>(r) * cols_ + c];
}

bool check_exclusive_law(const GridMap& g) {
    for (int i = 0; i < g.rows(); ++i) {
        std::set<int> seen;
        for (int j = 0; j < g.cols(); ++j)
            if (g.has(i, j) && !seen.insert(g.cell(i, j)).second) return false;
    }
    for (int j = 0; j < g.cols(); ++j) {
        std::set<int> seen;
        for (int i = 0; i < g.rows(); ++i)
            if (g.has(i, j) && !seen.insert(g.cell(i, j)).second) return false;
    }
    return true;
}

Clustering to_clustering(const GridMap& g) {
    std::vector<std::vector<Cell>> blocks(g.t());
    for (int i = 0; i < g.rows(); ++i)
        for (int j = 0; j < g.cols(); ++j)
            if (g.has(i, j)) blocks[g.cell(i, j)].push_back({i, j});
    blocks.erase(std::remove_if(blocks.begin(), blocks.end(),
                                [](const auto& b) { return b.empty(); }),
                 blocks.end());
    return Clustering(std::move(blocks));
}

GridMap cyclic_column_shift(const GridMap& g, int k) {
    GridMap out(g.rows(), g.cols(), g.t());
    for (int i = 0; i < g.rows(); ++i)
        for (int j = 0; j < g.cols(); ++j) {
            int v = g.cell(i, mod(j + k, g.cols()));
            if (v >= 0) out.set(i, j, v);
        }
    out.provenance = "shift(" + std::to_string(mod(k, g.cols())) + "):" + g.provenance;
    return out;
}

GridMap transpose(const GridMap& g) {
    GridMap out(g.cols(), g.rows(), g.t());
    for (int i = 0; i < g.rows(); ++i)
        for (int j = 0; j < g.cols(); ++j) {
            int v = g.cell(i, j);
            if (v >= 0) out.set(j, i, v);
        }
    out.provenance = "transpose:" + g.provenance;
    return out;
}

GridMap add_symbol_offset(const GridMap& g, int c) {
    GridMap out(g.rows(), g.cols(), g.t());
    for (int i = 0; i < g.rows(); ++i)
        for (int j = 0; j < g.cols(); ++j) {
            int v = g.cell(i, j);
            if (v >= 0) out.set(i, j, mod(v + c, g.t()));
        }
    out.provenance = "offset(" + std::to_string(c) + "):" + g.provenance;
    return out;
}

GridMap delete_columns(const GridMap& g, const std::vector<int>& keep) {
    if (keep.empty()) throw std::invalid_argument("must keep at least one column");
    std::set<int> seen;
    for (int j : keep) {
        if (j < 0 || j >= g.cols()) throw std::invalid_argument("kept column out of range");
        if (!seen.insert(j).second) throw std::invalid_argument("duplicate kept column");
    }
    GridMap out(g.rows(), static_cast<int>(keep.size()), g.t());
    for (int i = 0; i < g.rows(); ++i)
        for (std::size_t j = 0; j < keep.size(); ++j) {
            int v = g.cell(i, keep[j]);
            if (v >= 0) out.set(i, static_cast<int>(j), v);
        }
    out.provenance = "columns:" + g.provenance;
    return out;
}

GridMap xor_square(const PskConfig& cfg) {
    GridMap g(cfg.m, cfg.m, cfg.m);
    for (int i = 0; i < cfg.m; ++i)
        for (int j = 0; j < cfg.m; ++j) g.set(i, j, i ^ j);
    g.provenance = "xor(" + std::to_string(cfg.m) + ")";
    return g;
}

}  // namespace relaymap
