#pragma once

#include <vector>

#include "rainbow/grid.hpp"

namespace rainbow {

/// A proper n-edge-coloring of K_{m,n} with parts A = {u_0..u_{m-1}} and
/// B = {v_0..v_{n-1}}; edge u_i v_j carries color rect(i, j). Bijective with
/// LatinRectangle: properness at u_i is the row condition, properness at v_j
/// the column condition.
class EdgeColoring {
public:
    static EdgeColoring from_rectangle(LatinRectangle rect) {
        return EdgeColoring(std::move(rect));
    }

    const LatinRectangle& to_rectangle() const { return rect_; }

    int left_size() const { return rect_.rows(); }   // |A|
    int right_size() const { return rect_.cols(); }  // |B|
    int color(int a, int b) const { return rect_.at(a, b); }

    bool operator==(const EdgeColoring&) const = default;

private:
    explicit EdgeColoring(LatinRectangle rect) : rect_(std::move(rect)) {}
    LatinRectangle rect_;
};

inline EdgeColoring to_coloring(LatinRectangle rect) {
    return EdgeColoring::from_rectangle(std::move(rect));
}

/// A closed alternating walk u_{a_0} v_{b_0} u_{a_1} v_{b_1} ... u_{a_{k-1}}
/// v_{b_{k-1}} u_{a_0}, with distinct a's and distinct b's: a 2k-cycle in
/// K_{m,n}. colors lists the 2k edge colors in traversal order, starting with
/// edge (a_0, b_0). When all 2k colors are pairwise distinct the cycle is
/// multicolored and the object is a rainbow-cycle certificate.
struct CycleCertificate {
    std::vector<int> a_vertices;
    std::vector<int> b_vertices;
    std::vector<int> colors;

    int k() const { return static_cast<int>(a_vertices.size()); }
    bool is_rainbow() const;

    bool operator==(const CycleCertificate&) const = default;
};

// Independent re-validation: index ranges, vertex distinctness, colors match
// the coloring edge by edge, and (for certificates) pairwise distinct colors.
// Throws Error on the first defect.
void check_cycle(const EdgeColoring& coloring, const CycleCertificate& cycle,
                 bool require_rainbow);

bool is_valid_certificate(const EdgeColoring& coloring, const CycleCertificate& cycle) noexcept;

} // namespace rainbow
