#include "rainbow/fmc.hpp"

#include <algorithm>

#include "rainbow/constructions.hpp"
#include "rainbow/cycles.hpp"

namespace rainbow {

namespace provenance {
std::string monotone_from(int m, int n) {
    return "monotone from (" + std::to_string(m) + "," + std::to_string(n) + ")";
}
} // namespace provenance

std::vector<std::pair<int, int>> FmcReport::member_set() const {
    std::vector<std::pair<int, int>> out;
    for (const FmcEntry& e : pairs)
        if (e.member) out.emplace_back(e.m, e.n);
    return out;
}

bool FmcReport::row_monotone() const {
    for (const FmcEntry& e : pairs) {
        if (!e.member || e.m == k) continue;
        bool predecessor_member = false;
        for (const FmcEntry& p : pairs)
            if (p.n == e.n && p.m == e.m - 1) predecessor_member = p.member;
        if (!predecessor_member) return false;
    }
    return true;
}

namespace {

// A construction is only reported after its output is checked exhaustively.
FmcEntry checked_construction(int m, int n, int k, LatinRectangle witness, const char* tag) {
    if (find_rainbow_cycle(to_coloring(witness), k).has_value())
        throw Error(ErrorKind::Internal, "construction produced a rainbow cycle (bug)");
    FmcEntry e;
    e.m = m;
    e.n = n;
    e.k = k;
    e.member = true;
    e.provenance = tag;
    e.witness = std::move(witness);
    return e;
}

FmcEntry plain_entry(int m, int n, int k, bool member, std::string prov) {
    FmcEntry e;
    e.m = m;
    e.n = n;
    e.k = k;
    e.member = member;
    e.provenance = std::move(prov);
    return e;
}

} // namespace

FmcReport compute_fmc(int k, int max_m, int max_n, const SearchOptions& options) {
    if (k < 2) throw Error(ErrorKind::InvalidDimensions, "k must be >= 2");
    if (max_m < k || max_n < 2 * k)
        throw Error(ErrorKind::InvalidDimensions, "need max_m >= k and max_n >= 2k");

    FmcReport report;
    report.k = k;
    report.max_m = max_m;
    report.max_n = max_n;

    for (int n = 2 * k; n <= max_n; ++n) {
        int first_nonmember = -1; // smallest m proved nonmember at this n
        bool row_undecided = false;
        for (int m = k; m <= std::min(n, max_m); ++m) {
            if (k % 2 == 1 && n == 2 * k) {
                report.pairs.push_back(checked_construction(
                    m, n, k, l2xm_coloring(k, m), provenance::kConstructionL2xM));
                continue;
            }
            if (k == 3 && n == 8) {
                report.pairs.push_back(checked_construction(m, n, k, km8_coloring(m),
                                                            provenance::kConstructionKm8));
                continue;
            }
            if (n >= 5 * k - 6) {
                // K_{k,n} always contains a rainbow C_2k here; fewer-row
                // restriction carries nonexistence upward in m.
                report.pairs.push_back(plain_entry(
                    m, n, k, false,
                    m == k ? provenance::kTheoremBound : provenance::monotone_from(k, n)));
                continue;
            }
            if (first_nonmember >= 0) {
                report.pairs.push_back(
                    plain_entry(m, n, k, false, provenance::monotone_from(first_nonmember, n)));
                continue;
            }
            if (row_undecided) {
                report.undecided.emplace_back(m, n);
                continue;
            }

            SearchOutcome outcome = decide_membership(m, n, k, options);
            switch (outcome.verdict) {
            case Verdict::Found: {
                FmcEntry e = plain_entry(m, n, k, true, provenance::kSearchWitness);
                e.witness = std::move(outcome.witness);
                report.pairs.push_back(std::move(e));
                break;
            }
            case Verdict::ExhaustedNone:
                first_nonmember = m;
                report.pairs.push_back(plain_entry(m, n, k, false, provenance::kSearchExhausted));
                break;
            case Verdict::BudgetExceeded:
                report.budget_exceeded = true;
                row_undecided = true;
                report.undecided.emplace_back(m, n);
                break;
            }
        }
    }
    return report;
}

} // namespace rainbow
