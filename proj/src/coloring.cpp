#include "rainbow/coloring.hpp"

#include <set>

namespace rainbow {

bool CycleCertificate::is_rainbow() const {
    std::set<int> seen(colors.begin(), colors.end());
    return seen.size() == colors.size();
}

void check_cycle(const EdgeColoring& coloring, const CycleCertificate& cycle,
                 bool require_rainbow) {
    const int k = cycle.k();
    if (k < 2) throw Error(ErrorKind::Internal, "cycle must have k >= 2");
    if (static_cast<int>(cycle.b_vertices.size()) != k)
        throw Error(ErrorKind::Internal, "cycle needs k vertices on each side");
    if (static_cast<int>(cycle.colors.size()) != 2 * k)
        throw Error(ErrorKind::Internal, "cycle needs 2k colors");

    std::set<int> a_seen, b_seen;
    for (int a : cycle.a_vertices) {
        if (a < 0 || a >= coloring.left_size())
            throw Error(ErrorKind::Internal, "A-vertex index out of range");
        if (!a_seen.insert(a).second) throw Error(ErrorKind::Internal, "repeated A-vertex");
    }
    for (int b : cycle.b_vertices) {
        if (b < 0 || b >= coloring.right_size())
            throw Error(ErrorKind::Internal, "B-vertex index out of range");
        if (!b_seen.insert(b).second) throw Error(ErrorKind::Internal, "repeated B-vertex");
    }

    for (int i = 0; i < k; ++i) {
        int forward = coloring.color(cycle.a_vertices[i], cycle.b_vertices[i]);
        int backward = coloring.color(cycle.a_vertices[(i + 1) % k], cycle.b_vertices[i]);
        if (cycle.colors[2 * i] != forward || cycle.colors[2 * i + 1] != backward)
            throw Error(ErrorKind::Internal, "cycle colors disagree with the coloring");
    }

    if (require_rainbow && !cycle.is_rainbow())
        throw Error(ErrorKind::Internal, "certificate colors are not pairwise distinct");
}

bool is_valid_certificate(const EdgeColoring& coloring, const CycleCertificate& cycle) noexcept {
    try {
        check_cycle(coloring, cycle, /*require_rainbow=*/true);
        return true;
    } catch (const Error&) {
        return false;
    }
}

} // namespace rainbow
