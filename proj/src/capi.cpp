#include "rainbowforbid.h"

#include <cstring>
#include <new>
#include <string>

#include "rainbow/analysis.hpp"
#include "rainbow/constructions.hpp"
#include "rainbow/constructive.hpp"
#include "rainbow/cycles.hpp"
#include "rainbow/fmc.hpp"
#include "rainbow/json_io.hpp"
#include "rainbow/random_gen.hpp"
#include "rainbow/search.hpp"
#include "rainbow/verify.hpp"

using namespace rainbow;

struct rf_grid {
    LatinRectangle rect;
};
struct rf_certificate {
    CycleCertificate cert;
};
struct rf_search_outcome {
    SearchOutcome outcome;
    rf_grid* witness = nullptr; // borrowed view handed out by rf_search_witness
    ~rf_search_outcome() { delete witness; }
};
struct rf_fmc_report {
    FmcReport report;
};

// One wrapper serves all three verifiers.
struct rf_verify_report {
    long long violations = 0;
    std::string json;
};

namespace {

thread_local std::string t_last_error;

rf_status status_for(const Error& e) {
    switch (e.kind()) {
    case ErrorKind::DuplicateInRow:
    case ErrorKind::DuplicateInColumn:
    case ErrorKind::SymbolOutOfRange:
    case ErrorKind::EmptyCellUnsupported:
        return RF_ERR_VALIDATE;
    case ErrorKind::Parse:
        return RF_ERR_PARSE;
    case ErrorKind::Internal:
        return RF_ERR_INTERNAL;
    default:
        return RF_ERR_PARAM;
    }
}

template <typename Fn>
rf_status guarded(Fn&& fn) {
    try {
        t_last_error.clear();
        return fn();
    } catch (const Error& e) {
        t_last_error = e.what();
        return status_for(e);
    } catch (const std::bad_alloc&) {
        t_last_error = "out of memory";
        return RF_ERR_INTERNAL;
    } catch (const std::exception& e) {
        t_last_error = e.what();
        return RF_ERR_INTERNAL;
    }
}

char* dup_string(const std::string& s) {
    char* out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

SearchOptions make_options(uint64_t budget, int threads) {
    SearchOptions opts;
    if (budget > 0) opts.node_budget = budget;
    opts.threads = threads <= 0 ? 1 : threads;
    return opts;
}

rf_status grid_out(LatinRectangle rect, rf_grid** out) {
    *out = new rf_grid{std::move(rect)};
    return RF_OK;
}

} // namespace

extern "C" {

const char* rf_last_error(void) { return t_last_error.c_str(); }

void rf_string_free(char* s) { delete[] s; }

rf_status rf_grid_parse(const char* text, rf_grid** out) {
    return guarded([&] { return grid_out(LatinRectangle::parse(text ? text : ""), out); });
}

rf_status rf_grid_create(int rows, int cols, const int* cells, rf_grid** out) {
    return guarded([&] {
        if (!cells) throw Error(ErrorKind::InvalidDimensions, "null cell pointer");
        std::vector<int> v(cells, cells + static_cast<size_t>(rows < 0 ? 0 : rows) *
                                              static_cast<size_t>(cols < 0 ? 0 : cols));
        return grid_out(LatinRectangle::validate(rows, cols, std::move(v)), out);
    });
}

void rf_grid_free(rf_grid* grid) { delete grid; }

int rf_grid_rows(const rf_grid* grid) { return grid->rect.rows(); }
int rf_grid_cols(const rf_grid* grid) { return grid->rect.cols(); }
int rf_grid_cell(const rf_grid* grid, int row, int col) { return grid->rect.at(row, col); }

char* rf_grid_format(const rf_grid* grid) { return dup_string(grid->rect.format()); }
char* rf_grid_json(const rf_grid* grid) { return dup_string(grid_json(grid->rect)); }

rf_status rf_grid_restrict_rows(const rf_grid* grid, int rows, rf_grid** out) {
    return guarded([&] { return grid_out(restrict_rows(grid->rect, rows), out); });
}

rf_status rf_construct_l2xm(int k, int m, rf_grid** out) {
    return guarded([&] { return grid_out(l2xm_coloring(k, m), out); });
}

rf_status rf_construct_km8(int m, rf_grid** out) {
    return guarded([&] { return grid_out(km8_coloring(m), out); });
}

rf_status rf_construct_k37(rf_grid** out) {
    return guarded([&] { return grid_out(k37_coloring(), out); });
}

rf_status rf_construct_random(int m, int n, uint64_t seed, rf_grid** out) {
    return guarded([&] {
        std::mt19937_64 rng(seed);
        return grid_out(random_rectangle(m, n, rng), out);
    });
}

rf_status rf_find_rainbow_cycle(const rf_grid* grid, int k, rf_certificate** out) {
    return guarded([&] {
        auto found = find_rainbow_cycle(to_coloring(grid->rect), k);
        *out = found ? new rf_certificate{std::move(*found)} : nullptr;
        return RF_OK;
    });
}

rf_status rf_count_rainbow_cycles(const rf_grid* grid, int k, long long* count) {
    return guarded([&] {
        *count = count_rainbow_cycles(to_coloring(grid->rect), k);
        return RF_OK;
    });
}

rf_status rf_constructive_find(const rf_grid* grid, int k, rf_certificate** out) {
    return guarded([&] {
        *out = new rf_certificate{constructive_find(to_coloring(grid->rect), k)};
        return RF_OK;
    });
}

void rf_certificate_free(rf_certificate* cert) { delete cert; }

int rf_certificate_k(const rf_certificate* cert) { return cert->cert.k(); }

char* rf_certificate_json(const rf_certificate* cert) {
    return dup_string(certificate_json(cert->cert));
}

rf_status rf_classify_3x3(const rf_grid* grid, const int rows[3], const int cols[3],
                          char** json_out) {
    return guarded([&] {
        SubArrayView view(grid->rect, {rows[0], rows[1], rows[2]}, {cols[0], cols[1], cols[2]});
        *json_out = dup_string(classification_json(classify_3x3(view)));
        return RF_OK;
    });
}

rf_status rf_decide_membership(int m, int n, int k, uint64_t budget, int threads,
                               rf_search_outcome** out) {
    return guarded([&] {
        SearchOutcome outcome = decide_membership(m, n, k, make_options(budget, threads));
        auto* wrapped = new rf_search_outcome{std::move(outcome)};
        if (wrapped->outcome.witness) wrapped->witness = new rf_grid{*wrapped->outcome.witness};
        *out = wrapped;
        return wrapped->outcome.verdict == Verdict::BudgetExceeded ? RF_ERR_BUDGET : RF_OK;
    });
}

void rf_search_outcome_free(rf_search_outcome* outcome) { delete outcome; }

rf_verdict rf_search_verdict(const rf_search_outcome* outcome) {
    switch (outcome->outcome.verdict) {
    case Verdict::Found: return RF_VERDICT_FOUND;
    case Verdict::ExhaustedNone: return RF_VERDICT_EXHAUSTED_NONE;
    case Verdict::BudgetExceeded: return RF_VERDICT_BUDGET_EXCEEDED;
    }
    return RF_VERDICT_BUDGET_EXCEEDED;
}

const rf_grid* rf_search_witness(const rf_search_outcome* outcome) { return outcome->witness; }

uint64_t rf_search_nodes(const rf_search_outcome* outcome) { return outcome->outcome.stats.nodes; }
uint64_t rf_search_prunes_rainbow(const rf_search_outcome* outcome) {
    return outcome->outcome.stats.prunes_rainbow;
}
uint64_t rf_search_prunes_canonical(const rf_search_outcome* outcome) {
    return outcome->outcome.stats.prunes_canonical;
}
double rf_search_wall_ms(const rf_search_outcome* outcome) {
    return outcome->outcome.stats.wall_ms;
}

char* rf_search_outcome_json(const rf_search_outcome* outcome) {
    return dup_string(search_outcome_json(outcome->outcome));
}

rf_status rf_compute_fmc(int k, int max_m, int max_n, uint64_t budget, int threads,
                         rf_fmc_report** out) {
    return guarded([&] {
        FmcReport report = compute_fmc(k, max_m, max_n, make_options(budget, threads));
        bool exceeded = report.budget_exceeded;
        *out = new rf_fmc_report{std::move(report)};
        return exceeded ? RF_ERR_BUDGET : RF_OK;
    });
}

void rf_fmc_report_free(rf_fmc_report* report) { delete report; }

int rf_fmc_report_budget_exceeded(const rf_fmc_report* report) {
    return report->report.budget_exceeded ? 1 : 0;
}

char* rf_fmc_report_json(const rf_fmc_report* report) {
    return dup_string(fmc_report_json(report->report));
}

rf_status rf_verify_size7(rf_verify_report** out) {
    return guarded([&] {
        Size7ClassReport r = verify_size7_classes();
        *out = new rf_verify_report{r.violations, size7_report_json(r)};
        return RF_OK;
    });
}

rf_status rf_verify_size6(rf_verify_report** out) {
    return guarded([&] {
        Size6ClassReport r = verify_size6_classes();
        *out = new rf_verify_report{r.violations, size6_report_json(r)};
        return RF_OK;
    });
}

rf_status rf_verify_k37(uint64_t budget, int threads, rf_verify_report** out) {
    return guarded([&] {
        K37StructureReport r = verify_k37_structure(make_options(budget, threads));
        long long violations = r.violations_column_triple + r.violations_disjoint_columns;
        *out = new rf_verify_report{violations, k37_report_json(r)};
        return r.complete ? RF_OK : RF_ERR_BUDGET;
    });
}

void rf_verify_report_free(rf_verify_report* report) { delete report; }

long long rf_verify_violations(const rf_verify_report* report) { return report->violations; }

char* rf_verify_report_json(const rf_verify_report* report) { return dup_string(report->json); }

} // extern "C"
