/* rainbowforbid: proper edge-colorings of complete bipartite graphs that
 * forbid multicolored (rainbow) even cycles.
 *
 * C API over the C++ core: opaque handles, integer status codes, and
 * caller-freed strings. Every function that can fail returns rf_status;
 * rf_last_error() describes the most recent failure on the calling thread.
 */
#ifndef RAINBOWFORBID_H
#define RAINBOWFORBID_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum rf_status {
    RF_OK = 0,
    RF_ERR_VALIDATE = 1,  /* latin conditions or symbol range violated */
    RF_ERR_PARSE = 2,     /* malformed grid text */
    RF_ERR_PARAM = 3,     /* bad dimensions, ranges, or preconditions */
    RF_ERR_BUDGET = 4,    /* node budget exceeded (non-answer) */
    RF_ERR_INTERNAL = 5
} rf_status;

typedef enum rf_verdict {
    RF_VERDICT_FOUND = 0,
    RF_VERDICT_EXHAUSTED_NONE = 1,
    RF_VERDICT_BUDGET_EXCEEDED = 2
} rf_verdict;

typedef struct rf_grid rf_grid;
typedef struct rf_certificate rf_certificate;
typedef struct rf_search_outcome rf_search_outcome;
typedef struct rf_fmc_report rf_fmc_report;
typedef struct rf_verify_report rf_verify_report;

/* Message for the last failing call on this thread; empty string if none. */
const char* rf_last_error(void);

/* Free a string returned by any rf_*_format/_json function. */
void rf_string_free(char* s);

/* ---- grids (latin rectangles / proper edge-colorings) ---- */

/* Text format: first line "m n", then m lines of n space-separated symbols. */
rf_status rf_grid_parse(const char* text, rf_grid** out);
/* cells is row-major, length rows*cols. */
rf_status rf_grid_create(int rows, int cols, const int* cells, rf_grid** out);
void rf_grid_free(rf_grid* grid);

int rf_grid_rows(const rf_grid* grid);
int rf_grid_cols(const rf_grid* grid);
int rf_grid_cell(const rf_grid* grid, int row, int col);
char* rf_grid_format(const rf_grid* grid); /* text format */
char* rf_grid_json(const rf_grid* grid);

rf_status rf_grid_restrict_rows(const rf_grid* grid, int rows, rf_grid** out);

/* ---- forbidding constructions ---- */

/* First m rows of L2 x M, M the cyclic square of order k (k odd, k<=m<=2k). */
rf_status rf_construct_l2xm(int k, int m, rf_grid** out);
/* First m rows of L2 x L2 x L2 (3 <= m <= 8). */
rf_status rf_construct_km8(int m, rf_grid** out);
/* The frozen rainbow-C6-free 3x7 rectangle. */
rf_status rf_construct_k37(rf_grid** out);
/* Seeded random proper n-edge-coloring of K_{m,n}. */
rf_status rf_construct_random(int m, int n, uint64_t seed, rf_grid** out);

/* ---- rainbow cycle detection ---- */

/* On success *out is the canonically first rainbow 2k-cycle, or NULL when
 * the coloring has none. */
rf_status rf_find_rainbow_cycle(const rf_grid* grid, int k, rf_certificate** out);
rf_status rf_count_rainbow_cycles(const rf_grid* grid, int k, long long* count);
/* Constructive finder for K_{k,n}, n >= 5k-6; always yields a certificate. */
rf_status rf_constructive_find(const rf_grid* grid, int k, rf_certificate** out);

void rf_certificate_free(rf_certificate* cert);
int rf_certificate_k(const rf_certificate* cert);
/* {"k":.., "a_vertices":[..], "b_vertices":[..], "colors":[..]} */
char* rf_certificate_json(const rf_certificate* cert);

/* Classification record of the 3x3 view of `grid` given by three row and
 * three column indices (strictly increasing). JSON fields: distinct_count,
 * has_intercalate, has_tripled_element, two_lines_on_3_symbols,
 * rainbow_c6_free. */
rf_status rf_classify_3x3(const rf_grid* grid, const int rows[3], const int cols[3],
                          char** json_out);

/* ---- exhaustive membership search ---- */

/* threads <= 0 means 1; budget == 0 means the default (1e9 placements). */
rf_status rf_decide_membership(int m, int n, int k, uint64_t budget, int threads,
                               rf_search_outcome** out);
void rf_search_outcome_free(rf_search_outcome* outcome);
rf_verdict rf_search_verdict(const rf_search_outcome* outcome);
/* Borrowed reference, valid while the outcome lives; NULL unless Found. */
const rf_grid* rf_search_witness(const rf_search_outcome* outcome);
uint64_t rf_search_nodes(const rf_search_outcome* outcome);
uint64_t rf_search_prunes_rainbow(const rf_search_outcome* outcome);
uint64_t rf_search_prunes_canonical(const rf_search_outcome* outcome);
double rf_search_wall_ms(const rf_search_outcome* outcome);
char* rf_search_outcome_json(const rf_search_outcome* outcome);

/* ---- FMC(2k) table ---- */

rf_status rf_compute_fmc(int k, int max_m, int max_n, uint64_t budget, int threads,
                         rf_fmc_report** out);
void rf_fmc_report_free(rf_fmc_report* report);
int rf_fmc_report_budget_exceeded(const rf_fmc_report* report);
char* rf_fmc_report_json(const rf_fmc_report* report);

/* ---- classification verifiers ---- */

rf_status rf_verify_size7(rf_verify_report** out);
rf_status rf_verify_size6(rf_verify_report** out);
rf_status rf_verify_k37(uint64_t budget, int threads, rf_verify_report** out);
void rf_verify_report_free(rf_verify_report* report);
long long rf_verify_violations(const rf_verify_report* report);
char* rf_verify_report_json(const rf_verify_report* report);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* RAINBOWFORBID_H */
