#ifndef WGCALC_WGCALC_H
#define WGCALC_WGCALC_H

#include <stddef.h>
#include <stdint.h>

#if defined(WGC_BUILDING_LIBRARY)
#define WGC_API __attribute__((visibility("default")))
#else
#define WGC_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum wgc_status {
    WGC_OK = 0,
    WGC_ERR_INVALID_ARGUMENT = 1,
    WGC_ERR_SIZE_MISMATCH = 2,
    WGC_ERR_LIMIT_EXCEEDED = 3,
    WGC_ERR_SINGULAR_GRAM = 4,
    WGC_ERR_UNSUPPORTED_CATEGORY = 5,
    WGC_ERR_COLOR_STRING = 6,
    WGC_ERR_DIVISIBILITY = 7,
    WGC_ERR_PARSE = 8,
    WGC_ERR_UNKNOWN_SUITE = 9,
    WGC_ERR_INTERNAL = 10
} wgc_status;

typedef struct wgc_partition_list wgc_partition_list;
typedef struct wgc_table wgc_table;
typedef struct wgc_sample_batch wgc_sample_batch;
typedef struct wgc_report wgc_report;

/* Library version, e.g. "1.0.0". */
WGC_API const char* wgc_version(void);

/* Machine-readable name of a status ("ok", "singular-gram", ...). */
WGC_API const char* wgc_status_name(wgc_status status);

/* Message of the last failed call on this thread; empty after a success. */
WGC_API const char* wgc_last_error(void);

/* Releases a string returned through a char** out parameter. */
WGC_API void wgc_free(char* text);

/*
 * Conventions: partitions are written "1,3|2|4" (1-based), color words "1*1*" or
 * "1,*,1,*", rationals "num/den". Trace specs are given as lengths plus an optional
 * star array (0 = plain, 1 = starred; NULL means all plain).
 */

/* ---- partitions ---- */

WGC_API wgc_status wgc_partitions_all(int k, wgc_partition_list** out);
WGC_API wgc_status wgc_partitions_category(const char* category, int k, const char* colors,
                                           wgc_partition_list** out);
WGC_API size_t wgc_partition_list_size(const wgc_partition_list* list);
WGC_API wgc_status wgc_partition_list_get(const wgc_partition_list* list, size_t index, char** out);
WGC_API void wgc_partition_list_free(wgc_partition_list* list);

WGC_API wgc_status wgc_partition_canonical(const char* partition, char** out);
WGC_API wgc_status wgc_partition_join(const char* a, const char* b, char** out);
WGC_API wgc_status wgc_partition_is_noncrossing(const char* partition, int* out);
WGC_API wgc_status wgc_partition_block_count(const char* partition, int* out);
WGC_API wgc_status wgc_partition_mobius(const char* partition, int64_t* out);
WGC_API wgc_status wgc_cyclic_partition(int l, int k, char** out);

/* ---- categories ---- */

/* Canonical spelling of a category name. */
WGC_API wgc_status wgc_category_name(const char* category, char** out);
WGC_API wgc_status wgc_category_contains(const char* category, const char* partition, const char* colors,
                                         int* out);
/* Comma-separated list of the accepted category names. */
WGC_API const char* wgc_category_names(void);

/* ---- Gram and Weingarten tables ---- */

WGC_API wgc_status wgc_table_build(const char* category, int k, int n, const char* colors, wgc_table** out);
WGC_API size_t wgc_table_dim(const wgc_table* table);
WGC_API wgc_status wgc_table_basis(const wgc_table* table, size_t index, char** out);
WGC_API wgc_status wgc_table_gram(const wgc_table* table, size_t a, size_t b, char** out);
WGC_API wgc_status wgc_table_weingarten(const wgc_table* table, size_t a, size_t b, char** out);
WGC_API wgc_status wgc_table_determinant(const wgc_table* table, char** out);
WGC_API wgc_status wgc_table_verify(const wgc_table* table, int* out);
/* Haar integral of u_{i1 j1} ... u_{ik jk}; indices are 1-based and of length k. */
WGC_API wgc_status wgc_table_integrate(const wgc_table* table, const int* i, const int* j, size_t k, char** out);
WGC_API void wgc_table_free(wgc_table* table);

/* ---- exact moments at fixed n ---- */

WGC_API wgc_status wgc_trace_moment(const char* category, int n, const int* lengths, const int* stars, size_t r,
                                    char** out);
/* Products of traces of color words; for U-pairs and Hs(s), or "U" for the unitary group. */
WGC_API wgc_status wgc_word_moment(const char* category, int n, const char* const* words, size_t r, char** out);

/* ---- asymptotic counts ---- */

WGC_API wgc_status wgc_moment_count(const char* category, const int* lengths, const int* stars, size_t r,
                                    uint64_t* out);
WGC_API wgc_status wgc_cumulant_count(const char* category, const int* lengths, const int* stars, size_t r,
                                      uint64_t* out);
WGC_API wgc_status wgc_word_moment_count(const char* category, const char* const* words, size_t r, uint64_t* out);
WGC_API wgc_status wgc_word_cumulant_count(const char* category, const char* const* words, size_t r,
                                           uint64_t* out);
WGC_API wgc_status wgc_closed_form_cumulant(const char* category, const int* lengths, const int* stars, size_t r,
                                            int64_t* out);
/* s = 0 means s = infinity. */
WGC_API wgc_status wgc_hs_cumulant_count(int s, const char* const* words, size_t r, uint64_t* out);
WGC_API wgc_status wgc_cp_decomposition_cumulant(int s, const char* const* words, size_t r, char** out);
/* Cumulant count of Z_l(e_1), ..., Z_l(e_r): restrictions tau_l^{l e_i}. */
WGC_API wgc_status wgc_z_cumulant_count(int l, const int* e, size_t r, uint64_t* out);

/* ---- limit laws ---- */

/* Law of Tr(u^k) as JSON {"family", "mean", "variance", "lambda", "jump_moments", "cumulants"}. */
WGC_API wgc_status wgc_trace_law(const char* category, int k, int r_max, char** out);
/* Number of mismatches between the cycle decomposition and the closed forms (S, H, S+, H+). */
WGC_API wgc_status wgc_cycle_decomposition_mismatches(const char* category, int k_max, int* checks, int* mismatches);

/* ---- sampling ---- */

/* group: "O", "S", "H", "B", "U" or "Hs(s)". */
WGC_API wgc_status wgc_sample_trace_moment(const char* group, int n, const int* lengths, const int* stars, size_t r,
                                           int64_t trials, uint64_t seed, wgc_sample_batch** out);
WGC_API wgc_status wgc_sample_word_moment(const char* group, int n, const char* const* words, size_t r,
                                          int64_t trials, uint64_t seed, wgc_sample_batch** out);
WGC_API wgc_status wgc_sample_trace_statistics(const char* group, int n, const int* powers, size_t count,
                                               int64_t trials, uint64_t seed, wgc_sample_batch** out);
/* group "S" (cycle counts C_l) or "H" (signed counts Z_l+ and Z_l-). */
WGC_API wgc_status wgc_sample_cycle_statistics(const char* group, int n, int l_max, int64_t trials, uint64_t seed,
                                               wgc_sample_batch** out);
WGC_API size_t wgc_sample_batch_size(const wgc_sample_batch* batch);
WGC_API wgc_status wgc_sample_batch_get(const wgc_sample_batch* batch, size_t index, const char** id, double* mean,
                                        double* std_error);
WGC_API void wgc_sample_batch_free(wgc_sample_batch* batch);

/* Exact average over the whole finite group (S, H, Hs(s)). */
WGC_API wgc_status wgc_exhaustive_trace_moment(const char* group, int n, const int* lengths, const int* stars,
                                               size_t r, char** out);
WGC_API wgc_status wgc_exhaustive_word_moment(const char* group, int n, const char* const* words, size_t r,
                                              char** out);

/* ---- verification suites ---- */

/* Comma-separated suite names. */
WGC_API const char* wgc_suite_names(void);
/* kmax = 0 and trials = 0 select the suite defaults. */
WGC_API wgc_status wgc_suite_run(const char* suite, int kmax, int64_t trials, uint64_t seed, wgc_report** out);
WGC_API size_t wgc_report_size(const wgc_report* report);
WGC_API wgc_status wgc_report_get(const wgc_report* report, size_t index, const char** name, const char** expected,
                                  const char** actual, int* passed);
WGC_API double wgc_report_seconds(const wgc_report* report);
WGC_API void wgc_report_free(wgc_report* report);

#ifdef __cplusplus
}
#endif

#endif
