#pragma once

#include <vector>

#include "rainbow/grid.hpp"

namespace rainbow {

/// Canonical representative of the isotopy class of a rectangle: the
/// lexicographically least grid (row-major) reachable by permuting rows,
/// columns, and symbols. Idempotent; two rectangles are isotopic iff their
/// canonical forms are equal.
LatinRectangle canonical_form(const LatinRectangle& rect);

/// Same contract for standalone blocks, where "symbol permutation" means any
/// injective relabeling (blocks need not use a contiguous alphabet). The
/// result uses symbols 0..d-1 in first-occurrence order. Exhaustive over
/// r!*c! row/column arrangements, so intended for small views (3x3 in all
/// in-tree uses).
CellBlock canonical_block_form(const CellBlock& block);

/// Apply an isotopy (row_perm, col_perm, sym_perm): cell (r, c) moves to
/// (row_perm[r], col_perm[c]) and symbol s becomes sym_perm[s].
LatinRectangle apply_isotopy(const LatinRectangle& rect, const std::vector<int>& row_perm,
                             const std::vector<int>& col_perm, const std::vector<int>& sym_perm);

} // namespace rainbow
