#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "rainbow/error.hpp"

namespace rainbow {

/// An m-by-n array over the symbol alphabet {0, ..., n-1} such that every row
/// is a permutation of the alphabet and no symbol repeats within a column.
/// Rows double as the left part and columns as the right part of a properly
/// n-edge-colored K_{m,n}; cell (i, j) is the color of edge u_i v_j.
///
/// Instances are immutable; construct them through validate() or parse().
class LatinRectangle {
public:
    static LatinRectangle validate(int rows, int cols, std::vector<int> cells);
    static LatinRectangle validate(const std::vector<std::vector<int>>& grid);

    // Text format: first line "m n", then m lines of n space-separated
    // decimal symbols. A "." token (reserved for empty cells) is rejected.
    static LatinRectangle parse(std::string_view text);
    std::string format() const;

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    int at(int r, int c) const { return cells_[static_cast<size_t>(r) * cols_ + c]; }

    const std::vector<int>& cells() const { return cells_; }

    bool operator==(const LatinRectangle&) const = default;
    // Row-major lexicographic order (dimensions first); used for lex-minimal
    // canonical representatives.
    std::strong_ordering operator<=>(const LatinRectangle& other) const;

private:
    LatinRectangle(int rows, int cols, std::vector<int> cells)
        : rows_(rows), cols_(cols), cells_(std::move(cells)) {}

    int rows_;
    int cols_;
    std::vector<int> cells_;
};

/// A materialized r-by-c array of symbols that is row/column-latin but need
/// not use a contiguous alphabet: the value type for "partial latin square"
/// analyses of sub-arrays, where symbols come from the base rectangle.
struct CellBlock {
    int rows = 0;
    int cols = 0;
    std::vector<int> cells;

    int at(int r, int c) const { return cells[static_cast<size_t>(r) * cols + c]; }
    int& at(int r, int c) { return cells[static_cast<size_t>(r) * cols + c]; }

    bool is_row_column_latin() const;

    bool operator==(const CellBlock&) const = default;
    auto operator<=>(const CellBlock&) const = default;
};

CellBlock block_from(const std::vector<std::vector<int>>& grid);

/// A selection of rows and columns of a LatinRectangle. Index lists must be
/// strictly increasing and in bounds; the induced sub-grid inherits the
/// row/column-latin conditions from the base.
class SubArrayView {
public:
    SubArrayView(const LatinRectangle& base, std::vector<int> row_indices,
                 std::vector<int> col_indices);

    // Full view of the whole rectangle.
    explicit SubArrayView(const LatinRectangle& base);

    int rows() const { return static_cast<int>(row_indices_.size()); }
    int cols() const { return static_cast<int>(col_indices_.size()); }
    bool is_square() const { return rows() == cols(); }

    int at(int r, int c) const { return base_->at(row_indices_[r], col_indices_[c]); }

    const std::vector<int>& row_indices() const { return row_indices_; }
    const std::vector<int>& col_indices() const { return col_indices_; }
    const LatinRectangle& base() const { return *base_; }

    CellBlock block() const;

private:
    const LatinRectangle* base_;
    std::vector<int> row_indices_;
    std::vector<int> col_indices_;
};

} // namespace rainbow
