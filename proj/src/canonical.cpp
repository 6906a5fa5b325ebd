#include "rainbow/canonical.hpp"

#include <algorithm>
#include <numeric>

namespace rainbow {

namespace {

// Rename symbols by first occurrence in row-major reading order; the unique
// lexicographically least injective relabeling for a fixed arrangement.
std::vector<int> first_occurrence_renaming(const std::vector<int>& cells, int max_symbol) {
    std::vector<int> rename(static_cast<size_t>(max_symbol) + 1, -1);
    int next = 0;
    std::vector<int> out;
    out.reserve(cells.size());
    for (int s : cells) {
        if (rename[s] < 0) rename[s] = next++;
        out.push_back(rename[s]);
    }
    return out;
}

} // namespace

LatinRectangle canonical_form(const LatinRectangle& rect) {
    const int m = rect.rows();
    const int n = rect.cols();

    // Every symbol appears in every row, so once a first row and a column
    // order are fixed, first-occurrence renaming turns that row into
    // 0..n-1 and determines the whole symbol permutation. The remaining
    // rows become independent blocks of the row-major reading, so the
    // best row order is simply their sorted order. This visits m * n!
    // arrangements instead of m! * n! * n!.
    std::vector<int> col_order(n);
    std::vector<int> rename(n);
    std::vector<std::vector<int>> renamed_rows(m > 1 ? m - 1 : 0, std::vector<int>(n));
    std::vector<int> best;
    std::vector<int> candidate(static_cast<size_t>(m) * n);

    for (int first_row = 0; first_row < m; ++first_row) {
        std::iota(col_order.begin(), col_order.end(), 0);
        do {
            for (int j = 0; j < n; ++j) rename[rect.at(first_row, col_order[j])] = j;

            int out_row = 0;
            for (int r = 0; r < m; ++r) {
                if (r == first_row) continue;
                auto& row = renamed_rows[out_row++];
                for (int j = 0; j < n; ++j) row[j] = rename[rect.at(r, col_order[j])];
            }
            std::sort(renamed_rows.begin(), renamed_rows.end());

            for (int j = 0; j < n; ++j) candidate[j] = j;
            for (int r = 1; r < m; ++r)
                std::copy(renamed_rows[r - 1].begin(), renamed_rows[r - 1].end(),
                          candidate.begin() + static_cast<size_t>(r) * n);

            if (best.empty() || candidate < best) best = candidate;
        } while (std::next_permutation(col_order.begin(), col_order.end()));
    }

    return LatinRectangle::validate(m, n, std::move(best));
}

CellBlock canonical_block_form(const CellBlock& block) {
    const int r = block.rows;
    const int c = block.cols;
    int max_symbol = 0;
    for (int s : block.cells) {
        if (s < 0) throw Error(ErrorKind::SymbolOutOfRange, "negative symbol in block");
        max_symbol = std::max(max_symbol, s);
    }

    std::vector<int> row_order(r), col_order(c);
    std::vector<int> arranged(block.cells.size());
    std::vector<int> best;

    std::iota(row_order.begin(), row_order.end(), 0);
    do {
        std::iota(col_order.begin(), col_order.end(), 0);
        do {
            for (int i = 0; i < r; ++i)
                for (int j = 0; j < c; ++j)
                    arranged[static_cast<size_t>(i) * c + j] = block.at(row_order[i], col_order[j]);
            std::vector<int> renamed = first_occurrence_renaming(arranged, max_symbol);
            if (best.empty() || renamed < best) best = std::move(renamed);
        } while (std::next_permutation(col_order.begin(), col_order.end()));
    } while (std::next_permutation(row_order.begin(), row_order.end()));

    return CellBlock{r, c, std::move(best)};
}

LatinRectangle apply_isotopy(const LatinRectangle& rect, const std::vector<int>& row_perm,
                             const std::vector<int>& col_perm, const std::vector<int>& sym_perm) {
    const int m = rect.rows();
    const int n = rect.cols();
    if (static_cast<int>(row_perm.size()) != m || static_cast<int>(col_perm.size()) != n ||
        static_cast<int>(sym_perm.size()) != n)
        throw Error(ErrorKind::DimensionMismatch, "isotopy permutation sizes do not match");

    std::vector<int> cells(static_cast<size_t>(m) * n);
    for (int r = 0; r < m; ++r)
        for (int c = 0; c < n; ++c)
            cells[static_cast<size_t>(row_perm[r]) * n + col_perm[c]] = sym_perm[rect.at(r, c)];
    return LatinRectangle::validate(m, n, std::move(cells));
}

} // namespace rainbow
