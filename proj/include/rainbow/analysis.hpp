#pragma once

#include <array>
#include <optional>
#include <utility>
#include <vector>

#include "rainbow/grid.hpp"

namespace rainbow {

/// One cell per row and per column of a square view, all symbols distinct.
/// Cells are in view-local coordinates, listed by ascending row.
struct Transversal {
    std::vector<std::pair<int, int>> cells;
    std::vector<int> symbols; // cell entries, in cell order

    bool operator==(const Transversal&) const = default;
};

/// Latin subsquare of order 2: entries x,y / y,x on rows (r1,r2), cols (c1,c2).
struct Intercalate {
    std::pair<int, int> rows;
    std::pair<int, int> cols;
    std::pair<int, int> symbols;

    bool operator==(const Intercalate&) const = default;
};

// All transversals of a square block, ordered lexicographically by column
// assignment. Throws NotSquareView for non-square input.
std::vector<Transversal> transversals(const CellBlock& square);
std::vector<Transversal> transversals(const SubArrayView& view);

// All unordered pairs of cell-disjoint transversals of a 3x3 block whose
// symbol union has size exactly 6. Each pair is a rainbow-C6 witness for the
// corresponding K_{3,3} under the rectangle<->coloring correspondence.
std::vector<std::pair<Transversal, Transversal>> disjoint_transversal_pairs(
    const CellBlock& square);
std::vector<std::pair<Transversal, Transversal>> disjoint_transversal_pairs(
    const SubArrayView& view);

// Fast emptiness probe for the above (no allocation).
bool has_rainbow_c6_witness(const CellBlock& square);

// First intercalate in scan order: row pairs row-major, then column pairs.
std::optional<Intercalate> find_intercalate(const CellBlock& block);
std::optional<Intercalate> find_intercalate(const SubArrayView& view);

int distinct_symbol_count(const CellBlock& block);
int distinct_symbol_count(const SubArrayView& view);

struct ColumnTripleSquare {
    std::array<int, 3> columns; // column indices in the base rectangle
    CellBlock square;           // the induced 3x3 latin square (3 symbols)
};

// For a 3-row rectangle: the first (lexicographic) column triple whose 3x3
// view uses exactly 3 symbols, i.e. forms a latin square of order 3.
std::optional<ColumnTripleSquare> find_column_triple_latin_square(const LatinRectangle& rect);

/// Classification record for a 3x3 view (the five fields of the JSON format).
struct Classification3x3 {
    int distinct_count = 0;
    bool has_intercalate = false;
    bool has_tripled_element = false;
    bool two_lines_on_3_symbols = false;
    bool rainbow_c6_free = false;

    bool operator==(const Classification3x3&) const = default;
};

Classification3x3 classify_3x3(const CellBlock& square);
Classification3x3 classify_3x3(const SubArrayView& view);

} // namespace rainbow
