#pragma once

#include <optional>

#include "rainbow/grid.hpp"

namespace rainbow {

/// The first m rows of L2 x M for odd k, where L2 is the order-2 latin square
/// and M defaults to the cyclic square of order k. Any order-k latin square
/// may be supplied for M; the quadrant parity argument that makes the result
/// rainbow-C_{2k}-free does not depend on the choice.
/// Throws KNotOdd unless k is an odd integer >= 3, MOutOfRange unless
/// k <= m <= 2k, NotSquare/DimensionMismatch for a bad custom factor.
LatinRectangle l2xm_coloring(int k, int m,
                                  const std::optional<LatinRectangle>& factor = std::nullopt);

/// The first m rows of L2 x L2 x L2 (the order-8 square with entry r XOR c);
/// rainbow-C6-free. Throws MOutOfRange unless 3 <= m <= 8.
LatinRectangle km8_coloring(int m);

/// A fixed 3x7 latin rectangle that is rainbow-C6-free and contains a column
/// triple forming a latin square of order 3. Frozen from the canonical form
/// of the first witness produced by the exhaustive (3,7) membership search;
/// the derivation is re-run in the test suite.
LatinRectangle k37_coloring();

/// Top new_rows rows. Preserves validity and rainbow-freeness (a sub-coloring
/// never gains cycles). Throws MOutOfRange unless 1 <= new_rows <= rows.
LatinRectangle restrict_rows(const LatinRectangle& rect, int new_rows);

} // namespace rainbow
