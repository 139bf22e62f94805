#pragma once

#include <string>
#include <vector>

#include "relaymap/types.hpp"

namespace relaymap {

// A (possibly partial) map grid: rows index node A's symbol, columns node B's.
// Entries are relay symbols 0..t-1, or empty.
class GridMap {
public:
    GridMap() = default;
    GridMap(int rows, int cols, int t);

    // Builds from fully or partially specified rows; -1 marks an empty cell.
    // t == -1 infers the alphabet as max(symbol) + 1.
    static GridMap from_rows(const std::vector<std::vector<int>>& rows, int t = -1);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    int t() const { return t_; }

    bool has(int r, int c) const { return cell(r, c) >= 0; }
    int at(int r, int c) const;
    int cell(int r, int c) const;  // -1 when empty, no throw
    void set(int r, int c, int symbol);
    void clear_cell(int r, int c);

    std::size_t filled() const;
    bool complete() const { return filled() == static_cast<std::size_t>(rows_) * cols_; }

    std::vector<std::vector<int>> to_rows() const;

    std::string provenance;

    friend bool operator==(const GridMap& a, const GridMap& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.t_ == b.t_ && a.cells_ == b.cells_;
    }

private:
    int rows_ = 0, cols_ = 0, t_ = 0;
    std::vector<int16_t> cells_;
    void check(int r, int c) const;
};

// Partition of grid cells into same-symbol blocks, held in canonical form: each block
// sorted by (r, c), blocks ordered by their least cell, symbol names erased.
class Clustering {
public:
    Clustering() = default;
    explicit Clustering(std::vector<std::vector<Cell>> blocks);

    const std::vector<std::vector<Cell>>& blocks() const { return blocks_; }
    int block_count() const { return static_cast<int>(blocks_.size()); }
    int block_of(int r, int c) const;  // canonical block index, -1 if cell not covered
    const std::string& canonical_key() const { return key_; }
    int rows() const { return rows_; }
    int cols() const { return cols_; }

    friend bool operator==(const Clustering& a, const Clustering& b) { return a.key_ == b.key_; }
    bool operator<(const Clustering& b) const { return key_ < b.key_; }

private:
    std::vector<std::vector<Cell>> blocks_;
    std::string key_;
    std::vector<int> index_;
    int rows_ = 0, cols_ = 0;
};

// True iff no symbol repeats within any row or any column (the exclusive law for
// complete grids; for partial grids, no violation among filled cells).
bool check_exclusive_law(const GridMap& g);

// Symbol-preimage partition of the filled cells.
Clustering to_clustering(const GridMap& g);

// out(i, j) = in(i, (j + k) mod cols).
GridMap cyclic_column_shift(const GridMap& g, int k);

GridMap transpose(const GridMap& g);

// Relabel symbols s -> (s + c) mod t.
GridMap add_symbol_offset(const GridMap& g, int c);

// Restriction to the listed columns (order preserved); keep entries are column
// indices of g, each in range and distinct.
GridMap delete_columns(const GridMap& g, const std::vector<int>& keep);

// cell(i, j) = i XOR j; the bitwise-exclusive-or Latin square of order M.
GridMap xor_square(const PskConfig& cfg);

}  // namespace relaymap
