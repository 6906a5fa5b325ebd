#include "rainbow/random_gen.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>

namespace rainbow {

namespace {

// Fill row r of `cells` with a permutation avoiding column conflicts with the
// rows above, trying symbols in the shuffled preference order.
bool fill_row(std::vector<int>& cells, int n, int r, const std::vector<uint64_t>& col_used,
              const std::vector<int>& preference, int c, uint64_t row_used) {
    if (c == n) return true;
    for (int s : preference) {
        if (row_used >> s & 1) continue;
        if (col_used[c] >> s & 1) continue;
        cells[static_cast<size_t>(r) * n + c] = s;
        if (fill_row(cells, n, r, col_used, preference, c + 1, row_used | uint64_t{1} << s))
            return true;
    }
    return false;
}

} // namespace

LatinRectangle random_rectangle(int m, int n, std::mt19937_64& rng) {
    if (m < 1 || n < m || n >= 64)
        throw Error(ErrorKind::InvalidDimensions, "need 1 <= m <= n < 64");

    std::vector<int> cells(static_cast<size_t>(m) * n, -1);
    std::vector<uint64_t> col_used(n, 0);
    std::vector<int> preference(n);
    std::iota(preference.begin(), preference.end(), 0);

    for (int r = 0; r < m; ++r) {
        // A partial latin rectangle always extends by a full row (Hall's
        // condition holds), so the per-row backtracking cannot fail.
        std::shuffle(preference.begin(), preference.end(), rng);
        if (!fill_row(cells, n, r, col_used, preference, 0, 0))
            throw Error(ErrorKind::Internal, "row completion failed (bug)");
        for (int c = 0; c < n; ++c) col_used[c] |= uint64_t{1} << cells[static_cast<size_t>(r) * n + c];
    }
    return LatinRectangle::validate(m, n, std::move(cells));
}

Isotopy random_isotopy(int m, int n, std::mt19937_64& rng) {
    Isotopy iso;
    iso.row_perm.resize(m);
    iso.col_perm.resize(n);
    iso.sym_perm.resize(n);
    std::iota(iso.row_perm.begin(), iso.row_perm.end(), 0);
    std::iota(iso.col_perm.begin(), iso.col_perm.end(), 0);
    std::iota(iso.sym_perm.begin(), iso.sym_perm.end(), 0);
    std::shuffle(iso.row_perm.begin(), iso.row_perm.end(), rng);
    std::shuffle(iso.col_perm.begin(), iso.col_perm.end(), rng);
    std::shuffle(iso.sym_perm.begin(), iso.sym_perm.end(), rng);
    return iso;
}

} // namespace rainbow
