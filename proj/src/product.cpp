#include "rainbow/product.hpp"

namespace rainbow {

LatinRectangle direct_product(const LatinRectangle& left, const LatinRectangle& right) {
    if (!left.is_square() || !right.is_square())
        throw Error(ErrorKind::NotSquare, "direct product requires two latin squares");
    const int s = left.rows();
    const int t = right.rows();
    const int order = s * t;

    std::vector<int> cells(static_cast<size_t>(order) * order);
    for (int x = 0; x < order; ++x) {
        const int a = x / t, c = x % t;
        for (int y = 0; y < order; ++y) {
            const int b = y / t, d = y % t;
            cells[static_cast<size_t>(x) * order + y] = t * left.at(a, b) + right.at(c, d);
        }
    }
    return LatinRectangle::validate(order, order, std::move(cells));
}

LatinRectangle cyclic_square(int n) {
    if (n < 1) throw Error(ErrorKind::InvalidDimensions, "order must be positive");
    std::vector<int> cells(static_cast<size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) cells[static_cast<size_t>(i) * n + j] = (i + j) % n;
    return LatinRectangle::validate(n, n, std::move(cells));
}

} // namespace rainbow
