#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "rainbow/grid.hpp"

namespace rainbow {

struct SearchStats {
    uint64_t nodes = 0;            // symbol placements that passed the latin checks
    uint64_t prunes_rainbow = 0;   // placements rejected by the rainbow sub-witness check
    uint64_t prunes_canonical = 0; // candidates rejected by lex-leader constraints
    double wall_ms = 0.0;
};

enum class Verdict {
    Found,         // a rainbow-free coloring exists; witness attached
    ExhaustedNone, // full exploration, no rainbow-free coloring
    BudgetExceeded // node budget hit: a non-answer, never nonexistence
};

struct SearchOutcome {
    Verdict verdict = Verdict::BudgetExceeded;
    std::optional<LatinRectangle> witness;
    SearchStats stats;
};

struct SearchOptions {
    uint64_t node_budget = 1'000'000'000ULL;
    int threads = 1;
};

/// Decide whether (m, n) admits a proper n-edge-coloring of K_{m,n} with no
/// rainbow C_{2k}, by exhaustive backtracking over m-by-n latin rectangles.
///
/// Cells fill row-major with symbols tried ascending. Lex-leader symmetry
/// breaking fixes the first row to 0..n-1 and forces the first column to be
/// ascending; every isotopy class keeps at least one representative, so
/// ExhaustedNone is conclusive. After each placement, only rainbow cycles
/// through the new cell are searched (everything else was checked earlier).
///
/// The verdict and witness are independent of the thread count: the witness
/// is always the lexicographically least surviving grid under the scheme.
/// Throws InvalidDimensions unless 2 <= k <= m <= n and n >= 2k.
SearchOutcome decide_membership(int m, int n, int k, const SearchOptions& options = {});

struct CollectOutcome {
    Verdict verdict = Verdict::BudgetExceeded; // ExhaustedNone when enumeration completed
    std::vector<LatinRectangle> classes;       // canonical forms, sorted
    SearchStats stats;
};

/// Exhaustive-collection mode: all rainbow-C_{2k}-free m-by-n rectangles up
/// to isotopy (deduplicated canonical forms of every survivor).
CollectOutcome collect_free_classes(int m, int n, int k, const SearchOptions& options = {});

} // namespace rainbow
