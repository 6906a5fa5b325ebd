#include "rainbow/analysis.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>

namespace rainbow {

namespace {

void require_square(const CellBlock& b) {
    if (b.rows != b.cols)
        throw Error(ErrorKind::NotSquareView, "operation requires a square view");
}

// The 6 permutations of {0,1,2} and the 6 unordered cell-disjoint pairs
// among them (sigma[i] != tau[i] for all i).
constexpr std::array<std::array<int, 3>, 6> kPerm3 = {{
    {0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0},
}};
constexpr std::array<std::pair<int, int>, 6> kDisjointPerm3Pairs = {{
    {0, 3}, {0, 4}, {1, 2}, {1, 5}, {2, 5}, {3, 4},
}};

Transversal make_transversal(const CellBlock& b, const std::vector<int>& col_of_row) {
    Transversal t;
    const int r = b.rows;
    t.cells.reserve(r);
    t.symbols.reserve(r);
    for (int i = 0; i < r; ++i) {
        t.cells.emplace_back(i, col_of_row[i]);
        t.symbols.push_back(b.at(i, col_of_row[i]));
    }
    return t;
}

bool symbols_distinct(const CellBlock& b, const std::vector<int>& col_of_row) {
    uint64_t mask = 0;
    bool big = false;
    for (int i = 0; i < b.rows; ++i) {
        int s = b.at(i, col_of_row[i]);
        if (s >= 0 && s < 64 && !big) {
            uint64_t bit = uint64_t{1} << s;
            if (mask & bit) return false;
            mask |= bit;
        } else {
            big = true;
        }
    }
    if (!big) return true;
    std::set<int> seen;
    for (int i = 0; i < b.rows; ++i)
        if (!seen.insert(b.at(i, col_of_row[i])).second) return false;
    return true;
}

} // namespace

std::vector<Transversal> transversals(const CellBlock& square) {
    require_square(square);
    const int r = square.rows;
    std::vector<int> col_of_row(r);
    std::iota(col_of_row.begin(), col_of_row.end(), 0);

    std::vector<Transversal> out;
    do {
        if (symbols_distinct(square, col_of_row))
            out.push_back(make_transversal(square, col_of_row));
    } while (std::next_permutation(col_of_row.begin(), col_of_row.end()));
    return out;
}

std::vector<Transversal> transversals(const SubArrayView& view) {
    if (!view.is_square())
        throw Error(ErrorKind::NotSquareView, "operation requires a square view");
    return transversals(view.block());
}

std::vector<std::pair<Transversal, Transversal>> disjoint_transversal_pairs(
    const CellBlock& square) {
    require_square(square);
    if (square.rows != 3)
        throw Error(ErrorKind::NotSquareView, "disjoint transversal pairs are defined on 3x3 views");

    std::vector<std::pair<Transversal, Transversal>> out;
    for (auto [i, j] : kDisjointPerm3Pairs) {
        const auto& sigma = kPerm3[i];
        const auto& tau = kPerm3[j];
        std::set<int> symbols;
        for (int r = 0; r < 3; ++r) {
            symbols.insert(square.at(r, sigma[r]));
            symbols.insert(square.at(r, tau[r]));
        }
        if (symbols.size() == 6) {
            std::vector<int> a(sigma.begin(), sigma.end());
            std::vector<int> b(tau.begin(), tau.end());
            out.emplace_back(make_transversal(square, a), make_transversal(square, b));
        }
    }
    return out;
}

std::vector<std::pair<Transversal, Transversal>> disjoint_transversal_pairs(
    const SubArrayView& view) {
    if (!view.is_square())
        throw Error(ErrorKind::NotSquareView, "operation requires a square view");
    return disjoint_transversal_pairs(view.block());
}

bool has_rainbow_c6_witness(const CellBlock& square) {
    require_square(square);
    if (square.rows != 3)
        throw Error(ErrorKind::NotSquareView, "rainbow-C6 witness probe is defined on 3x3 views");

    bool small_symbols = true;
    for (int s : square.cells)
        if (s < 0 || s >= 64) small_symbols = false;
    if (!small_symbols) return !disjoint_transversal_pairs(square).empty();

    for (auto [i, j] : kDisjointPerm3Pairs) {
        const auto& sigma = kPerm3[i];
        const auto& tau = kPerm3[j];
        uint64_t mask = 0;
        int count = 0;
        for (int r = 0; r < 3; ++r) {
            for (int s : {square.at(r, sigma[r]), square.at(r, tau[r])}) {
                uint64_t bit = uint64_t{1} << s;
                if (!(mask & bit)) {
                    mask |= bit;
                    ++count;
                }
            }
        }
        if (count == 6) return true;
    }
    return false;
}

std::optional<Intercalate> find_intercalate(const CellBlock& block) {
    for (int r1 = 0; r1 < block.rows; ++r1)
        for (int r2 = r1 + 1; r2 < block.rows; ++r2)
            for (int c1 = 0; c1 < block.cols; ++c1)
                for (int c2 = c1 + 1; c2 < block.cols; ++c2) {
                    int x = block.at(r1, c1);
                    int y = block.at(r1, c2);
                    if (x != y && block.at(r2, c1) == y && block.at(r2, c2) == x)
                        return Intercalate{{r1, r2}, {c1, c2}, {x, y}};
                }
    return std::nullopt;
}

std::optional<Intercalate> find_intercalate(const SubArrayView& view) {
    return find_intercalate(view.block());
}

int distinct_symbol_count(const CellBlock& block) {
    std::set<int> seen(block.cells.begin(), block.cells.end());
    return static_cast<int>(seen.size());
}

int distinct_symbol_count(const SubArrayView& view) {
    return distinct_symbol_count(view.block());
}

std::optional<ColumnTripleSquare> find_column_triple_latin_square(const LatinRectangle& rect) {
    if (rect.rows() != 3)
        throw Error(ErrorKind::InvalidDimensions, "column-triple search requires exactly 3 rows");
    const int n = rect.cols();
    for (int c1 = 0; c1 < n; ++c1)
        for (int c2 = c1 + 1; c2 < n; ++c2)
            for (int c3 = c2 + 1; c3 < n; ++c3) {
                SubArrayView view(rect, {0, 1, 2}, {c1, c2, c3});
                CellBlock b = view.block();
                if (distinct_symbol_count(b) == 3)
                    return ColumnTripleSquare{{c1, c2, c3}, std::move(b)};
            }
    return std::nullopt;
}

Classification3x3 classify_3x3(const CellBlock& square) {
    require_square(square);
    if (square.rows != 3)
        throw Error(ErrorKind::NotSquareView, "classification is defined on 3x3 views");

    Classification3x3 cls;
    cls.distinct_count = distinct_symbol_count(square);
    cls.has_intercalate = find_intercalate(square).has_value();
    cls.rainbow_c6_free = !has_rainbow_c6_witness(square);

    for (int s : square.cells) {
        int occurrences = static_cast<int>(std::count(square.cells.begin(), square.cells.end(), s));
        if (occurrences >= 3) {
            cls.has_tripled_element = true;
            break;
        }
    }

    auto line_pair_on_3 = [&](bool by_columns) {
        for (int i = 0; i < 3; ++i)
            for (int j = i + 1; j < 3; ++j) {
                std::set<int> symbols;
                for (int t = 0; t < 3; ++t) {
                    symbols.insert(by_columns ? square.at(t, i) : square.at(i, t));
                    symbols.insert(by_columns ? square.at(t, j) : square.at(j, t));
                }
                if (symbols.size() == 3) return true;
            }
        return false;
    };
    cls.two_lines_on_3_symbols = line_pair_on_3(true) || line_pair_on_3(false);

    return cls;
}

Classification3x3 classify_3x3(const SubArrayView& view) {
    if (!view.is_square())
        throw Error(ErrorKind::NotSquareView, "classification is defined on 3x3 views");
    return classify_3x3(view.block());
}

} // namespace rainbow
