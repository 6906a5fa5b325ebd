#include "rainbow/constructions.hpp"

#include "rainbow/product.hpp"

namespace rainbow {

LatinRectangle l2xm_coloring(int k, int m, const std::optional<LatinRectangle>& factor) {
    if (k < 3 || k % 2 == 0)
        throw Error(ErrorKind::KNotOdd, "k must be an odd integer >= 3, got " + std::to_string(k));
    if (m < k || m > 2 * k)
        throw Error(ErrorKind::MOutOfRange,
                    "need k <= m <= 2k, got m = " + std::to_string(m) + " for k = " + std::to_string(k));

    LatinRectangle order_k = factor ? *factor : cyclic_square(k);
    if (!order_k.is_square())
        throw Error(ErrorKind::NotSquare, "custom factor must be a latin square");
    if (order_k.rows() != k)
        throw Error(ErrorKind::DimensionMismatch, "custom factor must have order k");

    return restrict_rows(direct_product(cyclic_square(2), order_k), m);
}

LatinRectangle km8_coloring(int m) {
    if (m < 3 || m > 8)
        throw Error(ErrorKind::MOutOfRange, "need 3 <= m <= 8, got m = " + std::to_string(m));
    LatinRectangle l2 = cyclic_square(2);
    return restrict_rows(direct_product(direct_product(l2, l2), l2), m);
}

LatinRectangle k37_coloring() {
    // Canonical form of the first witness of the exhaustive (3,7,3) search;
    // see the search tests for the re-derivation.
    static const LatinRectangle frozen = LatinRectangle::validate({
        {0, 1, 2, 3, 4, 5, 6},
        {1, 0, 3, 2, 5, 6, 4},
        {2, 3, 0, 1, 6, 4, 5},
    });
    return frozen;
}

LatinRectangle restrict_rows(const LatinRectangle& rect, int new_rows) {
    if (new_rows < 1 || new_rows > rect.rows())
        throw Error(ErrorKind::MOutOfRange, "row restriction out of range");
    std::vector<int> cells(rect.cells().begin(),
                           rect.cells().begin() + static_cast<size_t>(new_rows) * rect.cols());
    return LatinRectangle::validate(new_rows, rect.cols(), std::move(cells));
}

} // namespace rainbow
