#pragma once

#include <random>

#include "rainbow/grid.hpp"

namespace rainbow {

/// A random m-by-n latin rectangle (equivalently, a random proper
/// n-edge-coloring of K_{m,n}), built row by row with backtracking over
/// shuffled symbol orders. Not uniform over all rectangles; adequate for
/// property-test drivers.
LatinRectangle random_rectangle(int m, int n, std::mt19937_64& rng);

struct Isotopy {
    std::vector<int> row_perm;
    std::vector<int> col_perm;
    std::vector<int> sym_perm;
};

Isotopy random_isotopy(int m, int n, std::mt19937_64& rng);

} // namespace rainbow
