#include "rainbow/constructive.hpp"

#include <cstdint>

namespace rainbow {

CycleCertificate constructive_find(const EdgeColoring& coloring, int k) {
    const int m = coloring.left_size();
    const int n = coloring.right_size();
    if (k < 2) throw Error(ErrorKind::InvalidDimensions, "k must be >= 2");
    if (m != k)
        throw Error(ErrorKind::PreconditionViolated,
                    "constructive finder needs exactly k = " + std::to_string(k) + " rows, got " +
                        std::to_string(m));
    if (n < 5 * k - 6)
        throw Error(ErrorKind::PreconditionViolated,
                    "constructive finder needs n >= 5k-6 = " + std::to_string(5 * k - 6) +
                        ", got n = " + std::to_string(n));
    if (n >= 64) throw Error(ErrorKind::InvalidDimensions, "coloring too large");

    std::vector<int> path_a{0}; // A-vertices in path order
    std::vector<int> path_b;    // B-vertices between them
    uint64_t on_path_a = 1, used_b = 0, used_colors = 0;

    auto try_extend = [&](int a_next) {
        const int a_end = path_a.back();
        for (int b = 0; b < n; ++b) {
            if (used_b >> b & 1) continue;
            int c1 = coloring.color(a_end, b);
            int c2 = coloring.color(a_next, b);
            // c1 != c2 by properness at v_b.
            if ((used_colors >> c1 & 1) || (used_colors >> c2 & 1)) continue;
            path_b.push_back(b);
            path_a.push_back(a_next);
            used_b |= uint64_t{1} << b;
            on_path_a |= uint64_t{1} << a_next;
            used_colors |= (uint64_t{1} << c1) | (uint64_t{1} << c2);
            return true;
        }
        return false;
    };

    while (static_cast<int>(path_a.size()) < k) {
        // Default next endpoint: smallest A-vertex off the path. The blocked
        // set S_t union S_{t+1} union {b_1..b_{t-1}} has at most 5t-6 < n
        // members, so some extension must exist; trying the remaining
        // off-path A-vertices covers the endpoint re-selection step.
        bool extended = false;
        for (int a_next = 0; a_next < k && !extended; ++a_next) {
            if (on_path_a >> a_next & 1) continue;
            extended = try_extend(a_next);
        }
        if (!extended)
            throw Error(ErrorKind::Internal,
                        "path extension stalled; counting bound violated (bug)");
    }

    // Close the cycle through a B-vertex fresh at both endpoints.
    const int a_first = path_a.front();
    const int a_last = path_a.back();
    for (int b = 0; b < n; ++b) {
        if (used_b >> b & 1) continue;
        int c1 = coloring.color(a_last, b);
        int c2 = coloring.color(a_first, b);
        if ((used_colors >> c1 & 1) || (used_colors >> c2 & 1)) continue;
        path_b.push_back(b);

        CycleCertificate cert;
        cert.a_vertices = path_a;
        cert.b_vertices = path_b;
        cert.colors.reserve(2 * k);
        for (int i = 0; i < k; ++i) {
            cert.colors.push_back(coloring.color(cert.a_vertices[i], cert.b_vertices[i]));
            cert.colors.push_back(coloring.color(cert.a_vertices[(i + 1) % k], cert.b_vertices[i]));
        }
        check_cycle(coloring, cert, /*require_rainbow=*/true);
        return cert;
    }
    throw Error(ErrorKind::Internal, "cycle closure stalled; counting bound violated (bug)");
}

} // namespace rainbow
