#include "rainbow/verify.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "rainbow/canonical.hpp"

namespace rainbow {

namespace {

// All row/column-latin 3x3 fills in first-occurrence normal form (reading
// row-major, each cell is at most one past the largest symbol so far). Every
// relabeling class contains exactly one normal form, so this hits every
// isotopy class at least once before deduplication.
void enumerate_normal_forms(CellBlock& b, int cell, int max_used,
                            const std::function<void(const CellBlock&)>& sink) {
    if (cell == 9) {
        sink(b);
        return;
    }
    const int r = cell / 3, c = cell % 3;
    const int limit = std::min(max_used + 1, 8);
    for (int s = 0; s <= limit; ++s) {
        bool clash = false;
        for (int i = 0; i < c && !clash; ++i) clash = b.at(r, i) == s;
        for (int i = 0; i < r && !clash; ++i) clash = b.at(i, c) == s;
        if (clash) continue;
        b.at(r, c) = s;
        enumerate_normal_forms(b, cell + 1, std::max(max_used, s), sink);
    }
    b.at(r, c) = -1;
}

} // namespace

std::vector<CellBlock> enumerate_3x3_classes(int distinct) {
    if (distinct < 3 || distinct > 9)
        throw Error(ErrorKind::InvalidDimensions, "a filled latin 3x3 uses 3..9 symbols");

    std::set<CellBlock> classes;
    CellBlock scratch{3, 3, std::vector<int>(9, -1)};
    enumerate_normal_forms(scratch, 0, -1, [&](const CellBlock& b) {
        // Normal form uses symbols 0..d-1, so the largest value + 1 = |L|.
        int d = *std::max_element(b.cells.begin(), b.cells.end()) + 1;
        if (d == distinct) classes.insert(canonical_block_form(b));
    });
    return {classes.begin(), classes.end()};
}

Size7ClassReport verify_size7_classes() {
    Size7ClassReport report;
    for (const CellBlock& b : enumerate_3x3_classes(7)) {
        Classification3x3 cls = classify_3x3(b);
        ++report.classes_total;
        if (cls.has_intercalate) ++report.classes_with_intercalate;
        if (cls.rainbow_c6_free) ++report.classes_rainbow_free;
        if (cls.rainbow_c6_free != cls.has_intercalate) ++report.violations;
    }
    return report;
}

Size6ClassReport verify_size6_classes() {
    Size6ClassReport report;
    for (const CellBlock& b : enumerate_3x3_classes(6)) {
        Classification3x3 cls = classify_3x3(b);
        ++report.classes_total;
        if (cls.two_lines_on_3_symbols) ++report.classes_with_two_lines;
        if (cls.has_tripled_element) ++report.classes_with_tripled;
        if (cls.has_intercalate) ++report.classes_with_intercalate;
        if (cls.rainbow_c6_free) ++report.classes_rainbow_free;

        bool any_condition =
            cls.two_lines_on_3_symbols || cls.has_tripled_element || cls.has_intercalate;
        if (any_condition && !cls.rainbow_c6_free) ++report.violations;
        if (!any_condition && cls.rainbow_c6_free) ++report.free_without_condition;
    }
    return report;
}

K37StructureReport verify_k37_structure(const SearchOptions& options) {
    K37StructureReport report;
    CollectOutcome collected = collect_free_classes(3, 7, 3, options);
    report.stats = collected.stats;
    report.complete = collected.verdict == Verdict::ExhaustedNone;
    report.classes_total = static_cast<long long>(collected.classes.size());

    for (const LatinRectangle& rect : collected.classes) {
        if (!find_column_triple_latin_square(rect).has_value())
            ++report.violations_column_triple;

        bool disjoint_pair = false;
        std::vector<std::set<int>> column_symbols(rect.cols());
        for (int c = 0; c < rect.cols(); ++c)
            for (int r = 0; r < rect.rows(); ++r) column_symbols[c].insert(rect.at(r, c));
        for (int i = 0; i < rect.cols() && !disjoint_pair; ++i)
            for (int j = i + 1; j < rect.cols() && !disjoint_pair; ++j) {
                bool overlap = false;
                for (int s : column_symbols[i]) overlap = overlap || column_symbols[j].count(s);
                disjoint_pair = !overlap;
            }
        if (!disjoint_pair) ++report.violations_disjoint_columns;
    }
    return report;
}

} // namespace rainbow
