#pragma once

#include <vector>

#include "rainbow/analysis.hpp"
#include "rainbow/search.hpp"

namespace rainbow {

/// All fully-filled row/column-latin 3x3 arrays with exactly `distinct`
/// symbols, one canonical representative per isotopy class (row perms x
/// column perms x injective relabelings), sorted.
std::vector<CellBlock> enumerate_3x3_classes(int distinct);

/// The |L| = 7 biconditional: rainbow-C6-free iff an intercalate is present.
struct Size7ClassReport {
    int classes_total = 0;
    int classes_with_intercalate = 0;
    int classes_rainbow_free = 0;
    int violations = 0;
};
Size7ClassReport verify_size7_classes();

/// The |L| = 6 sufficient conditions: two lines on exactly 3 symbols, a
/// tripled element, or an intercalate each force rainbow-C6-freeness. The
/// converse gap (free classes matching no condition) is reported, not
/// asserted; only sufficiency holds.
struct Size6ClassReport {
    int classes_total = 0;
    int classes_with_two_lines = 0;
    int classes_with_tripled = 0;
    int classes_with_intercalate = 0;
    int classes_rainbow_free = 0;
    int free_without_condition = 0; // informational converse gap
    int violations = 0;
};
Size6ClassReport verify_size6_classes();

/// Structural claims over every rainbow-C6-free 3x7 rectangle up to isotopy:
/// each contains a column triple forming an order-3 latin square, and some
/// two columns with disjoint symbol sets.
struct K37StructureReport {
    long long classes_total = 0;
    int violations_column_triple = 0;
    int violations_disjoint_columns = 0;
    bool complete = false; // enumeration finished within budget
    SearchStats stats;
};
K37StructureReport verify_k37_structure(const SearchOptions& options = {});

} // namespace rainbow
