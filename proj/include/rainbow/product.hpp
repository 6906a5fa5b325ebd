#pragma once

#include "rainbow/grid.hpp"

namespace rainbow {

/// Direct product of two latin squares of orders s and t: the order s*t
/// square with entry t*L[a][b] + M[c][d] at position (t*a + c, t*b + d).
/// Throws NotSquare unless both factors are squares.
LatinRectangle direct_product(const LatinRectangle& left, const LatinRectangle& right);

/// The cyclic latin square of order n: entry (i + j) mod n. cyclic_square(2)
/// is the order-2 square [[0,1],[1,0]].
LatinRectangle cyclic_square(int n);

} // namespace rainbow
