#include "rainbow/cycles.hpp"

#include <algorithm>

namespace rainbow {

namespace {

struct CycleEnumerator {
    const EdgeColoring& coloring;
    int k;
    bool rainbow_only;
    const std::function<bool(const CycleCertificate&)>& visit;

    int m, n;
    std::vector<int> a_seq, b_seq, color_seq;
    uint64_t used_a = 0, used_b = 0, used_colors = 0;
    bool stopped = false;

    CycleEnumerator(const EdgeColoring& coloring, int k, bool rainbow_only,
                    const std::function<bool(const CycleCertificate&)>& visit)
        : coloring(coloring), k(k), rainbow_only(rainbow_only), visit(visit),
          m(coloring.left_size()), n(coloring.right_size()) {
        a_seq.reserve(k);
        b_seq.reserve(k);
        color_seq.reserve(2 * k);
    }

    bool color_ok(int c) const { return !rainbow_only || !(used_colors >> c & 1); }

    void push_color(int c) {
        color_seq.push_back(c);
        used_colors |= uint64_t{1} << c;
    }
    void pop_color() {
        // Colors may legitimately repeat when rainbow_only is off; only clear
        // the bit when this was the last use.
        int c = color_seq.back();
        color_seq.pop_back();
        if (std::find(color_seq.begin(), color_seq.end(), c) == color_seq.end())
            used_colors &= ~(uint64_t{1} << c);
    }

    void run() {
        for (int a0 = 0; a0 < m && !stopped; ++a0) {
            a_seq.push_back(a0);
            used_a |= uint64_t{1} << a0;
            extend_b(1);
            used_a &= ~(uint64_t{1} << a0);
            a_seq.pop_back();
        }
    }

    // Choose b_{step-1}, the B-vertex following a_{step-1}.
    void extend_b(int step) {
        const int a_cur = a_seq.back();
        const bool last = step == k;
        for (int b = 0; b < n && !stopped; ++b) {
            if (used_b >> b & 1) continue;
            if (last && b < b_seq.front()) continue; // direction: b_0 < b_{k-1}
            int c_in = coloring.color(a_cur, b);
            if (!color_ok(c_in)) continue;
            if (last) {
                int c_close = coloring.color(a_seq.front(), b);
                if (rainbow_only && ((used_colors >> c_close & 1) || c_close == c_in)) continue;
                b_seq.push_back(b);
                push_color(c_in);
                push_color(c_close);
                if (!visit(CycleCertificate{a_seq, b_seq, color_seq})) stopped = true;
                pop_color();
                pop_color();
                b_seq.pop_back();
            } else {
                b_seq.push_back(b);
                used_b |= uint64_t{1} << b;
                push_color(c_in);
                extend_a(step);
                pop_color();
                used_b &= ~(uint64_t{1} << b);
                b_seq.pop_back();
            }
        }
    }

    // Choose a_step, the A-vertex following b_{step-1}; a_0 stays minimal.
    void extend_a(int step) {
        const int b_cur = b_seq.back();
        for (int a = a_seq.front() + 1; a < m && !stopped; ++a) {
            if (used_a >> a & 1) continue;
            int c = coloring.color(a, b_cur);
            if (!color_ok(c)) continue;
            a_seq.push_back(a);
            used_a |= uint64_t{1} << a;
            push_color(c);
            extend_b(step + 1);
            pop_color();
            used_a &= ~(uint64_t{1} << a);
            a_seq.pop_back();
        }
    }
};

void check_k(const EdgeColoring& coloring, int k) {
    if (k < 2) throw Error(ErrorKind::InvalidDimensions, "cycle length parameter k must be >= 2");
    if (k > std::min(coloring.left_size(), coloring.right_size()))
        throw Error(ErrorKind::KTooLarge,
                    "k = " + std::to_string(k) + " exceeds min(m, n) = " +
                        std::to_string(std::min(coloring.left_size(), coloring.right_size())));
    if (coloring.right_size() >= 64)
        throw Error(ErrorKind::InvalidDimensions, "coloring too large for the cycle searcher");
}

} // namespace

void for_each_cycle(const EdgeColoring& coloring, int k, bool rainbow_only,
                    const std::function<bool(const CycleCertificate&)>& visit) {
    check_k(coloring, k);
    CycleEnumerator e(coloring, k, rainbow_only, visit);
    e.run();
}

std::optional<CycleCertificate> find_rainbow_cycle(const EdgeColoring& coloring, int k) {
    std::optional<CycleCertificate> found;
    for_each_cycle(coloring, k, /*rainbow_only=*/true, [&](const CycleCertificate& c) {
        found = c;
        return false;
    });
    return found;
}

long long count_rainbow_cycles(const EdgeColoring& coloring, int k) {
    long long count = 0;
    for_each_cycle(coloring, k, /*rainbow_only=*/true, [&](const CycleCertificate&) {
        ++count;
        return true;
    });
    return count;
}

unsigned long long total_cycle_count(int m, int n, int k) {
    auto binomial = [](int a, int b) -> unsigned long long {
        if (b < 0 || b > a) return 0;
        unsigned long long r = 1;
        for (int i = 1; i <= b; ++i) r = r * (a - b + i) / i;
        return r;
    };
    unsigned long long factorial_k = 1, factorial_k1 = 1;
    for (int i = 2; i <= k; ++i) factorial_k *= i;
    for (int i = 2; i <= k - 1; ++i) factorial_k1 *= i;
    return binomial(m, k) * binomial(n, k) * factorial_k * factorial_k1 / 2;
}

QuadrantProfile quadrant_profile(const EdgeColoring& ambient, const CycleCertificate& cycle,
                                 int block) {
    if (ambient.left_size() != 2 * block || ambient.right_size() != 2 * block)
        throw Error(ErrorKind::DimensionMismatch,
                    "quadrant profile requires a 2k-by-2k ambient coloring");
    check_cycle(ambient, cycle, /*require_rainbow=*/false);

    QuadrantProfile p;
    const int k = cycle.k();
    auto tally = [&](int row, int col) {
        if (row < block)
            (col < block ? p.top_left : p.top_right)++;
        else
            (col < block ? p.bottom_left : p.bottom_right)++;
    };
    for (int i = 0; i < k; ++i) {
        tally(cycle.a_vertices[i], cycle.b_vertices[i]);
        tally(cycle.a_vertices[(i + 1) % k], cycle.b_vertices[i]);
    }
    return p;
}

} // namespace rainbow
