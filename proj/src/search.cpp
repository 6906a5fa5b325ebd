#include "rainbow/search.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <climits>
#include <mutex>
#include <set>
#include <thread>

#include "rainbow/canonical.hpp"
#include "rainbow/cycles.hpp"

namespace rainbow {

namespace {

constexpr uint64_t kSaturated = ~uint64_t{0};

// Derangement count, saturating. When k >= 3 no rainbow prune can fire while
// the second row is being filled, so this is a lower bound on the placements
// any full run must spend: a sound a-priori budget guard.
uint64_t derangements_saturating(int n) {
    if (n <= 1) return n == 1 ? 0 : 1;
    uint64_t prev2 = 1, prev1 = 0; // D(0), D(1)
    for (int i = 2; i <= n; ++i) {
        uint64_t sum = prev1 + prev2;
        if (sum > kSaturated / static_cast<uint64_t>(i - 1)) return kSaturated;
        uint64_t cur = static_cast<uint64_t>(i - 1) * sum;
        prev2 = prev1;
        prev1 = cur;
    }
    return prev1;
}

struct SharedState {
    uint64_t budget = 0;
    std::atomic<uint64_t> nodes{0};
    std::atomic<uint64_t> prunes_rainbow{0};
    std::atomic<uint64_t> prunes_canonical{0};
    std::atomic<bool> budget_hit{false};
    std::atomic<size_t> next_task{0};
    std::atomic<size_t> best_found_task{SIZE_MAX};
    bool collect_mode = false;

    std::mutex sink_mutex;
    std::set<LatinRectangle> collected;                   // canonical forms
    std::vector<std::pair<size_t, LatinRectangle>> found; // (task, witness)
};

// One backtracking worker; owns its grid, flushes counters in batches.
class Worker {
public:
    Worker(int m, int n, int k, SharedState& shared, int flush_batch)
        : m_(m), n_(n), k_(k), shared_(shared), flush_batch_(flush_batch),
          grid_(static_cast<size_t>(m) * n, -1), col_mask_(n, 0),
          full_mask_((uint32_t{1} << n) - 1) {
        for (int c = 0; c < n; ++c) {
            grid_[c] = c; // first row fixed to the identity permutation
            col_mask_[c] = uint32_t{1} << c;
        }
    }

    // Explore all completions of the grid whose row 1 starts with `prefix`.
    void explore_task(size_t task_index, const std::vector<int>& prefix) {
        task_index_ = task_index;
        row_mask_ = 0;
        for (int c = 0; c < static_cast<int>(prefix.size()); ++c) place(1, c, prefix[c]);
        descend(1, static_cast<int>(prefix.size()));
        for (int c = static_cast<int>(prefix.size()) - 1; c >= 0; --c) unplace(1, c);
        row_mask_ = 0;
        flush();
    }

    // Surviving row-1 prefixes of the given length, in lexicographic order.
    std::vector<std::vector<int>> enumerate_prefixes(int prefix_len) {
        std::vector<std::vector<int>> out;
        row_mask_ = 0;
        enumerate_rec(prefix_len, 0, out);
        flush();
        return out;
    }

private:
    int at(int r, int c) const { return grid_[static_cast<size_t>(r) * n_ + c]; }

    void place(int r, int c, int s) {
        grid_[static_cast<size_t>(r) * n_ + c] = s;
        row_mask_ |= uint32_t{1} << s;
        col_mask_[c] |= uint32_t{1} << s;
    }
    void unplace(int r, int c) {
        int s = grid_[static_cast<size_t>(r) * n_ + c];
        grid_[static_cast<size_t>(r) * n_ + c] = -1;
        row_mask_ &= ~(uint32_t{1} << s);
        col_mask_[c] &= ~(uint32_t{1} << s);
    }

    void flush() {
        shared_.nodes.fetch_add(local_nodes_, std::memory_order_relaxed);
        shared_.prunes_rainbow.fetch_add(local_prunes_rainbow_, std::memory_order_relaxed);
        shared_.prunes_canonical.fetch_add(local_prunes_canonical_, std::memory_order_relaxed);
        local_nodes_ = local_prunes_rainbow_ = local_prunes_canonical_ = 0;
        if (shared_.nodes.load(std::memory_order_relaxed) > shared_.budget)
            shared_.budget_hit.store(true, std::memory_order_relaxed);
    }

    // True when the budget is gone or this subtree can no longer matter.
    bool aborted() {
        if (++since_check_ < flush_batch_) return false;
        since_check_ = 0;
        flush();
        if (shared_.budget_hit.load(std::memory_order_relaxed)) return true;
        return !shared_.collect_mode &&
               task_index_ > shared_.best_found_task.load(std::memory_order_relaxed);
    }

    // Does the just-placed cell (r, c) close a rainbow 2k-cycle among the
    // filled cells? Any new cycle must pass through the new cell, so the
    // grid stays rainbow-free by induction.
    bool closes_rainbow_cycle(int r, int c) const {
        if (r < k_ - 1) return false;
        if (k_ == 2) return closes_rainbow_c4(r, c);
        if (k_ == 3) return closes_rainbow_c6(r, c);
        return closes_rainbow_general(r, c);
    }

    bool closes_rainbow_c4(int r, int c) const {
        const int s = at(r, c);
        for (int r1 = 0; r1 < r; ++r1) {
            const int sc = at(r1, c);
            for (int z = 0; z < c; ++z)
                // The two same-row/same-column pairs are distinct by the
                // latin conditions; only the cross pairs need checking.
                if (at(r, z) != sc && at(r1, z) != s) return true;
        }
        return false;
    }

    // Rainbow C6 through (r, c): rows {r1 < r2 < r}, a partner column z < c
    // in row r, and a third column w used only in the earlier rows (w may
    // exceed c; those rows are fully filled). The six cycle cells are the
    // window minus a transversal omitting (r, w), which leaves two routings.
    bool closes_rainbow_c6(int r, int c) const {
        const uint32_t bit_rc = uint32_t{1} << at(r, c);
        for (int r1 = 0; r1 < r; ++r1) {
            const uint32_t bit_r1c = uint32_t{1} << at(r1, c);
            for (int r2 = r1 + 1; r2 < r; ++r2) {
                const uint32_t bit_r2c = uint32_t{1} << at(r2, c);
                for (int z = 0; z < c; ++z) {
                    const uint32_t pair_z = bit_rc | (uint32_t{1} << at(r, z));
                    // Routing 1 keeps (r1,c),(r2,z); routing 2 keeps (r2,c),(r1,z).
                    const uint32_t base1 = pair_z | bit_r1c | (uint32_t{1} << at(r2, z));
                    const uint32_t base2 = pair_z | bit_r2c | (uint32_t{1} << at(r1, z));
                    const bool ok1 = std::popcount(base1) == 4;
                    const bool ok2 = std::popcount(base2) == 4;
                    if (!ok1 && !ok2) continue;
                    for (int w = 0; w < n_; ++w) {
                        if (w == c || w == z) continue;
                        const uint32_t bits_w =
                            (uint32_t{1} << at(r1, w)) | (uint32_t{1} << at(r2, w));
                        if (ok1 && std::popcount(base1 | bits_w) == 6) return true;
                        if (ok2 && std::popcount(base2 | bits_w) == 6) return true;
                    }
                }
            }
        }
        return false;
    }

    // General k: DFS for a rainbow 2k-cycle through edge (r, c) over the
    // filled region (rows < r complete, row r filled through column c).
    bool closes_rainbow_general(int r, int c) const {
        return general_from_col(r, c, c, 1, uint32_t{1} << c, uint64_t{1} << at(r, c));
    }

    bool general_from_col(int anchor_row, int anchor_col, int col, int depth, uint32_t used_cols,
                          uint64_t used_colors, uint32_t used_rows = 0) const {
        for (int row = 0; row < anchor_row; ++row) {
            if (used_rows >> row & 1) continue;
            const int c_in = at(row, col);
            if (used_colors >> c_in & 1) continue;
            if (depth == k_ - 1) {
                // Close through a column left of the anchor so the anchor
                // row's cell there is filled.
                for (int close = 0; close < anchor_col; ++close) {
                    if (used_cols >> close & 1) continue;
                    const int c_out = at(row, close);
                    const int c_back = at(anchor_row, close);
                    if (c_out == c_back) continue;
                    const uint64_t mask = used_colors | uint64_t{1} << c_in;
                    if ((mask >> c_out & 1) || (mask >> c_back & 1)) continue;
                    return true;
                }
            } else {
                for (int next = 0; next < n_; ++next) {
                    if (used_cols >> next & 1) continue;
                    const int c_out = at(row, next);
                    if (c_out == c_in || (used_colors >> c_out & 1)) continue;
                    if (general_from_col(anchor_row, anchor_col, next, depth + 1,
                                         used_cols | uint32_t{1} << next,
                                         used_colors | (uint64_t{1} << c_in) |
                                             (uint64_t{1} << c_out),
                                         used_rows | uint32_t{1} << row))
                        return true;
                }
            }
        }
        return false;
    }

    // Backtracking over cells row-major from (1, prefix_len). Returns false
    // when the subtree was aborted (budget, cancellation, or Found).
    bool descend(int r, int c) {
        if (c == n_) {
            ++r;
            c = 0;
            row_mask_ = 0;
        }
        if (r == m_) return emit_complete();

        uint32_t avail = ~(row_mask_ | col_mask_[c]) & full_mask_;
        if (c == 0) {
            // First column ascending: lex-leader over row order.
            uint32_t below = (uint32_t{2} << at(r - 1, 0)) - 1;
            local_prunes_canonical_ += std::popcount(avail & below);
            avail &= ~below;
        }
        const uint32_t saved_row_mask = row_mask_;
        while (avail) {
            const int s = std::countr_zero(avail);
            avail &= avail - 1;
            if (aborted()) return false;
            place(r, c, s);
            ++local_nodes_;
            if (closes_rainbow_cycle(r, c)) {
                ++local_prunes_rainbow_;
                unplace(r, c);
                row_mask_ = saved_row_mask;
                continue;
            }
            const bool keep_going = descend(r, c + 1);
            unplace(r, c);
            row_mask_ = saved_row_mask;
            if (!keep_going) return false;
        }
        return true;
    }

    bool emit_complete() {
        // Independent re-validation of every emitted survivor.
        std::vector<int> cells(grid_.begin(), grid_.end());
        LatinRectangle witness = LatinRectangle::validate(m_, n_, std::move(cells));
        if (find_rainbow_cycle(to_coloring(witness), k_).has_value())
            throw Error(ErrorKind::Internal, "survivor re-check found a rainbow cycle (bug)");

        if (shared_.collect_mode) {
            LatinRectangle canon = canonical_form(witness);
            std::lock_guard<std::mutex> lock(shared_.sink_mutex);
            shared_.collected.insert(std::move(canon));
            return true; // keep exhausting
        }

        {
            std::lock_guard<std::mutex> lock(shared_.sink_mutex);
            shared_.found.emplace_back(task_index_, std::move(witness));
        }
        size_t expected = shared_.best_found_task.load();
        while (task_index_ < expected &&
               !shared_.best_found_task.compare_exchange_weak(expected, task_index_)) {
        }
        return false; // stop this subtree; smaller tasks keep running
    }

    void enumerate_rec(int prefix_len, int c, std::vector<std::vector<int>>& out) {
        if (c == prefix_len) {
            out.emplace_back(grid_.begin() + n_, grid_.begin() + n_ + prefix_len);
            return;
        }
        uint32_t avail = ~(row_mask_ | col_mask_[c]) & full_mask_;
        const uint32_t saved_row_mask = row_mask_;
        while (avail) {
            const int s = std::countr_zero(avail);
            avail &= avail - 1;
            place(1, c, s);
            ++local_nodes_;
            if (closes_rainbow_cycle(1, c))
                ++local_prunes_rainbow_;
            else
                enumerate_rec(prefix_len, c + 1, out);
            unplace(1, c);
            row_mask_ = saved_row_mask;
        }
    }

    int m_, n_, k_;
    SharedState& shared_;
    int flush_batch_;
    size_t task_index_ = 0;
    int since_check_ = 0;
    std::vector<int> grid_;
    uint32_t row_mask_ = 0; // symbols used in the row currently being filled
    std::vector<uint32_t> col_mask_;
    uint32_t full_mask_;
    uint64_t local_nodes_ = 0, local_prunes_rainbow_ = 0, local_prunes_canonical_ = 0;
};

struct RunResult {
    Verdict verdict = Verdict::BudgetExceeded;
    std::optional<LatinRectangle> witness;
    SearchStats stats;
    std::set<LatinRectangle> collected;
};

RunResult run_search(int m, int n, int k, const SearchOptions& options, bool collect_mode) {
    if (k < 2 || m < k || n < m || n < 2 * k)
        throw Error(ErrorKind::InvalidDimensions,
                    "need 2 <= k <= m <= n and n >= 2k, got m=" + std::to_string(m) +
                        " n=" + std::to_string(n) + " k=" + std::to_string(k));
    if (n >= 32) throw Error(ErrorKind::InvalidDimensions, "n must stay below 32 (desk scale)");

    const auto start = std::chrono::steady_clock::now();
    RunResult result;

    SharedState shared;
    shared.budget = options.node_budget;
    shared.collect_mode = collect_mode;

    auto finalize = [&](Verdict v) {
        result.verdict = v;
        result.stats.nodes = shared.nodes.load();
        result.stats.prunes_rainbow = shared.prunes_rainbow.load();
        result.stats.prunes_canonical = shared.prunes_canonical.load();
        result.stats.wall_ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
                .count();
        result.collected = std::move(shared.collected);
        return result;
    };

    if (k >= 3 && derangements_saturating(n) > options.node_budget)
        return finalize(Verdict::BudgetExceeded);

    const int threads = std::max(1, options.threads);
    const int flush_batch = threads == 1 ? 64 : 512;
    const int prefix_len = std::min(2, n - 1);

    Worker prefix_worker(m, n, k, shared, /*flush_batch=*/1);
    std::vector<std::vector<int>> tasks = prefix_worker.enumerate_prefixes(prefix_len);
    if (shared.budget_hit.load()) return finalize(Verdict::BudgetExceeded);

    auto worker_loop = [&]() {
        Worker w(m, n, k, shared, flush_batch);
        for (;;) {
            const size_t t = shared.next_task.fetch_add(1);
            if (t >= tasks.size()) break;
            if (shared.budget_hit.load(std::memory_order_relaxed)) break;
            if (!collect_mode && t > shared.best_found_task.load(std::memory_order_relaxed))
                continue;
            w.explore_task(t, tasks[t]);
        }
    };

    if (threads == 1) {
        worker_loop();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(threads);
        for (int i = 0; i < threads; ++i) pool.emplace_back(worker_loop);
        for (auto& th : pool) th.join();
    }

    if (shared.budget_hit.load()) return finalize(Verdict::BudgetExceeded);
    if (!collect_mode && shared.best_found_task.load() != SIZE_MAX) {
        const size_t best = shared.best_found_task.load();
        for (auto& [task, witness] : shared.found)
            if (task == best) {
                result.witness = std::move(witness);
                break;
            }
        return finalize(Verdict::Found);
    }
    return finalize(Verdict::ExhaustedNone);
}

} // namespace

SearchOutcome decide_membership(int m, int n, int k, const SearchOptions& options) {
    RunResult r = run_search(m, n, k, options, /*collect_mode=*/false);
    SearchOutcome out;
    out.verdict = r.verdict;
    out.witness = std::move(r.witness);
    out.stats = r.stats;
    return out;
}

CollectOutcome collect_free_classes(int m, int n, int k, const SearchOptions& options) {
    RunResult r = run_search(m, n, k, options, /*collect_mode=*/true);
    CollectOutcome out;
    out.verdict = r.verdict;
    out.classes.assign(r.collected.begin(), r.collected.end());
    out.stats = r.stats;
    return out;
}

} // namespace rainbow
