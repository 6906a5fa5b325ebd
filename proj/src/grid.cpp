#include "rainbow/grid.hpp"

#include <algorithm>
#include <sstream>

namespace rainbow {

namespace {

std::string cell_name(int r, int c) {
    return "(" + std::to_string(r) + "," + std::to_string(c) + ")";
}

} // namespace

LatinRectangle LatinRectangle::validate(int rows, int cols, std::vector<int> cells) {
    if (rows < 1 || cols < rows)
        throw Error(ErrorKind::InvalidDimensions,
                    "need 1 <= rows <= cols, got " + std::to_string(rows) + "x" +
                        std::to_string(cols));
    if (cells.size() != static_cast<size_t>(rows) * cols)
        throw Error(ErrorKind::InvalidDimensions, "cell count does not match dimensions");

    auto at = [&](int r, int c) { return cells[static_cast<size_t>(r) * cols + c]; };

    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c)
            if (at(r, c) < 0 || at(r, c) >= cols)
                throw Error(ErrorKind::SymbolOutOfRange,
                            "symbol " + std::to_string(at(r, c)) + " at cell " +
                                cell_name(r, c) + " outside 0.." + std::to_string(cols - 1));

    // Rows are fully filled, so "at most once per row" makes each row a
    // permutation of the alphabet.
    std::vector<int> seen(cols, -1);
    for (int r = 0; r < rows; ++r) {
        std::fill(seen.begin(), seen.end(), -1);
        for (int c = 0; c < cols; ++c) {
            int s = at(r, c);
            if (seen[s] >= 0)
                throw Error(ErrorKind::DuplicateInRow,
                            "symbol " + std::to_string(s) + " repeats in row " +
                                std::to_string(r));
            seen[s] = c;
        }
    }
    for (int c = 0; c < cols; ++c) {
        std::fill(seen.begin(), seen.end(), -1);
        for (int r = 0; r < rows; ++r) {
            int s = at(r, c);
            if (seen[s] >= 0)
                throw Error(ErrorKind::DuplicateInColumn,
                            "symbol " + std::to_string(s) + " repeats in column " +
                                std::to_string(c));
            seen[s] = r;
        }
    }

    return LatinRectangle(rows, cols, std::move(cells));
}

LatinRectangle LatinRectangle::validate(const std::vector<std::vector<int>>& grid) {
    if (grid.empty())
        throw Error(ErrorKind::InvalidDimensions, "empty grid");
    const int rows = static_cast<int>(grid.size());
    const int cols = static_cast<int>(grid[0].size());
    std::vector<int> cells;
    cells.reserve(static_cast<size_t>(rows) * cols);
    for (const auto& row : grid) {
        if (static_cast<int>(row.size()) != cols)
            throw Error(ErrorKind::InvalidDimensions, "ragged grid");
        cells.insert(cells.end(), row.begin(), row.end());
    }
    return validate(rows, cols, std::move(cells));
}

LatinRectangle LatinRectangle::parse(std::string_view text) {
    std::istringstream in{std::string(text)};
    int rows = 0, cols = 0;
    if (!(in >> rows >> cols))
        throw Error(ErrorKind::Parse, "expected header line \"m n\"");
    if (rows < 1 || cols < 1)
        throw Error(ErrorKind::Parse, "non-positive dimensions in header");

    std::vector<int> cells;
    cells.reserve(static_cast<size_t>(rows) * cols);
    for (long long i = 0; i < static_cast<long long>(rows) * cols; ++i) {
        std::string tok;
        if (!(in >> tok))
            throw Error(ErrorKind::Parse, "grid body ended early: expected " +
                                              std::to_string(static_cast<long long>(rows) * cols) +
                                              " cells, got " + std::to_string(i));
        if (tok == ".")
            throw Error(ErrorKind::EmptyCellUnsupported,
                        "empty cells (\".\") are reserved and not accepted");
        size_t pos = 0;
        int value = 0;
        try {
            value = std::stoi(tok, &pos);
        } catch (const std::exception&) {
            throw Error(ErrorKind::Parse, "bad cell token \"" + tok + "\"");
        }
        if (pos != tok.size())
            throw Error(ErrorKind::Parse, "bad cell token \"" + tok + "\"");
        cells.push_back(value);
    }
    std::string extra;
    if (in >> extra)
        throw Error(ErrorKind::Parse, "trailing token \"" + extra + "\" after grid body");

    return validate(rows, cols, std::move(cells));
}

std::string LatinRectangle::format() const {
    std::ostringstream out;
    out << rows_ << ' ' << cols_ << '\n';
    for (int r = 0; r < rows_; ++r) {
        for (int c = 0; c < cols_; ++c) {
            if (c) out << ' ';
            out << at(r, c);
        }
        out << '\n';
    }
    return out.str();
}

std::strong_ordering LatinRectangle::operator<=>(const LatinRectangle& other) const {
    if (auto cmp = rows_ <=> other.rows_; cmp != 0) return cmp;
    if (auto cmp = cols_ <=> other.cols_; cmp != 0) return cmp;
    return std::lexicographical_compare_three_way(cells_.begin(), cells_.end(),
                                                  other.cells_.begin(), other.cells_.end());
}

bool CellBlock::is_row_column_latin() const {
    for (int r = 0; r < rows; ++r)
        for (int c1 = 0; c1 < cols; ++c1)
            for (int c2 = c1 + 1; c2 < cols; ++c2)
                if (at(r, c1) == at(r, c2)) return false;
    for (int c = 0; c < cols; ++c)
        for (int r1 = 0; r1 < rows; ++r1)
            for (int r2 = r1 + 1; r2 < rows; ++r2)
                if (at(r1, c) == at(r2, c)) return false;
    return true;
}

CellBlock block_from(const std::vector<std::vector<int>>& grid) {
    CellBlock b;
    b.rows = static_cast<int>(grid.size());
    b.cols = grid.empty() ? 0 : static_cast<int>(grid[0].size());
    for (const auto& row : grid) {
        if (static_cast<int>(row.size()) != b.cols)
            throw Error(ErrorKind::InvalidDimensions, "ragged block");
        b.cells.insert(b.cells.end(), row.begin(), row.end());
    }
    return b;
}

namespace {

void check_indices(const std::vector<int>& idx, int bound, const char* what) {
    for (size_t i = 0; i < idx.size(); ++i) {
        if (idx[i] < 0 || idx[i] >= bound)
            throw Error(ErrorKind::BadView, std::string(what) + " index out of bounds");
        if (i > 0 && idx[i] <= idx[i - 1])
            throw Error(ErrorKind::BadView,
                        std::string(what) + " indices must be strictly increasing");
    }
    if (idx.empty())
        throw Error(ErrorKind::BadView, std::string(what) + " index list is empty");
}

} // namespace

SubArrayView::SubArrayView(const LatinRectangle& base, std::vector<int> row_indices,
                           std::vector<int> col_indices)
    : base_(&base), row_indices_(std::move(row_indices)), col_indices_(std::move(col_indices)) {
    check_indices(row_indices_, base.rows(), "row");
    check_indices(col_indices_, base.cols(), "column");
}

SubArrayView::SubArrayView(const LatinRectangle& base) : base_(&base) {
    row_indices_.resize(base.rows());
    col_indices_.resize(base.cols());
    for (int r = 0; r < base.rows(); ++r) row_indices_[r] = r;
    for (int c = 0; c < base.cols(); ++c) col_indices_[c] = c;
}

CellBlock SubArrayView::block() const {
    CellBlock b;
    b.rows = rows();
    b.cols = cols();
    b.cells.resize(static_cast<size_t>(b.rows) * b.cols);
    for (int r = 0; r < b.rows; ++r)
        for (int c = 0; c < b.cols; ++c) b.at(r, c) = at(r, c);
    return b;
}

} // namespace rainbow
