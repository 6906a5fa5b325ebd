#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rainbow/search.hpp"

namespace rainbow {

namespace provenance {
inline constexpr const char* kConstructionL2xM = "construction (l2xm)";
inline constexpr const char* kConstructionKm8 = "construction (km8)";
inline constexpr const char* kSearchWitness = "search witness";
inline constexpr const char* kSearchExhausted = "search exhausted";
inline constexpr const char* kTheoremBound = "theorem bound (5k-6)";
// Monotone entries carry the pair they derive from: "monotone from (4,7)".
std::string monotone_from(int m, int n);
} // namespace provenance

struct FmcEntry {
    int m = 0;
    int n = 0;
    int k = 0;
    bool member = false;
    std::string provenance;
    std::optional<LatinRectangle> witness; // present for members

    bool operator==(const FmcEntry& other) const {
        return m == other.m && n == other.n && k == other.k && member == other.member &&
               provenance == other.provenance && witness == other.witness;
    }
};

struct FmcReport {
    int k = 0;
    int max_m = 0;
    int max_n = 0;
    bool budget_exceeded = false;           // some pairs were left undecided
    std::vector<std::pair<int, int>> undecided;
    std::vector<FmcEntry> pairs;            // sorted by (n, m)

    std::vector<std::pair<int, int>> member_set() const;
    bool row_monotone() const; // (m,n) member implies (m',n) member for k <= m' <= m
};

/// Determine FMC(2k) membership for every pair k <= m <= min(n, max_m),
/// 2k <= n <= max_n. Pairs are settled by (in order of preference) the
/// forbidding constructions, the n >= 5k-6 bound plus downward monotonicity,
/// and the exhaustive search with upward monotonicity for nonexistence.
/// Pairs that exceed the node budget are listed as undecided rather than
/// guessed. For k = 3 use max_m >= 8, max_n >= 9 to cover the whole table.
FmcReport compute_fmc(int k, int max_m, int max_n, const SearchOptions& options = {});

} // namespace rainbow
