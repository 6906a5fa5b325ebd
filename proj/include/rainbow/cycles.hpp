#pragma once

#include <cstdint>
#include <functional>
#include <optional>

#include "rainbow/coloring.hpp"

namespace rainbow {

/// Enumerate 2k-cycles of K_{m,n} in canonical order: a_0 is the smallest
/// A-index on the cycle and the direction is fixed by b_0 < b_{k-1}, so each
/// unoriented cycle is visited exactly once. With rainbow_only, branches that
/// repeat a color are pruned. The visitor returns false to stop enumeration.
void for_each_cycle(const EdgeColoring& coloring, int k, bool rainbow_only,
                    const std::function<bool(const CycleCertificate&)>& visit);

/// The lexicographically first rainbow 2k-cycle under the canonical ordering,
/// or nullopt. Throws KTooLarge if k > min(m, n), InvalidDimensions if k < 2.
std::optional<CycleCertificate> find_rainbow_cycle(const EdgeColoring& coloring, int k);

/// Exact number of distinct rainbow 2k-cycles (unoriented).
long long count_rainbow_cycles(const EdgeColoring& coloring, int k);

/// Closed-form total number of 2k-cycles in K_{m,n}:
/// C(m,k) * C(n,k) * k! * (k-1)! / 2.
unsigned long long total_cycle_count(int m, int n, int k);

/// Cell counts of a cycle's edges in the four k-by-k blocks of a 2k-by-2k
/// coloring, named clockwise from the top-left.
struct QuadrantProfile {
    int top_left = 0;      // rows < k, cols < k
    int top_right = 0;     // rows < k, cols >= k
    int bottom_right = 0;  // rows >= k, cols >= k
    int bottom_left = 0;   // rows >= k, cols < k

    // Top-half and right-half cell counts are vertex degree sums over the
    // cycle, hence even for every closed cycle.
    bool parity_ok() const {
        return (top_left + top_right) % 2 == 0 && (top_right + bottom_right) % 2 == 0;
    }
    // Cells in the two blocks whose entries are the k low symbols.
    int diagonal_sum() const { return top_left + bottom_right; }
    int total() const { return top_left + top_right + bottom_right + bottom_left; }
};

/// Profile of a cycle in a 2k-by-2k ambient coloring with block size k.
/// Throws DimensionMismatch unless both sides equal 2 * block.
QuadrantProfile quadrant_profile(const EdgeColoring& ambient, const CycleCertificate& cycle,
                                 int block);

} // namespace rainbow
