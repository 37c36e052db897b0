/*
 * knotcone C API.
 *
 * Every fallible call returns a kc_status; on failure a human-readable
 * message is available from kc_last_error() on the same thread until the
 * next call. Objects are opaque handles released with the matching
 * kc_*_free function. Strings returned through char** out-parameters are
 * owned by the caller and released with kc_string_free.
 */
#ifndef KNOTCONE_H
#define KNOTCONE_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(KNOTCONE_BUILDING)
#    define KC_API __declspec(dllexport)
#  else
#    define KC_API __declspec(dllimport)
#  endif
#else
#  define KC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum kc_status {
  KC_OK = 0,
  KC_ERR_INVALID_ARGUMENT = 1,
  KC_ERR_PARSE = 2,
  KC_ERR_VALIDATION = 3,
  KC_ERR_DOMAIN = 4,
  KC_ERR_DIMENSION = 5,
  KC_ERR_NOT_A_CHAIN_MAP = 6,
  KC_ERR_NOT_A_DIFFERENTIAL = 7,
  KC_ERR_INTERNAL = 8
} kc_status;

typedef enum kc_format { KC_FORMAT_JSON = 0, KC_FORMAT_TSV = 1 } kc_format;

typedef struct kc_complex kc_complex;
typedef struct kc_rank_vector kc_rank_vector;
typedef struct kc_cone_report kc_cone_report;

KC_API const char* kc_version(void);
KC_API const char* kc_last_error(void);
KC_API const char* kc_status_name(kc_status status);
KC_API void kc_string_free(char* s);

/* ---- graded complexes ---------------------------------------------------- */

/* Parse only; invariant violations are left for kc_complex_validate. */
KC_API kc_status kc_complex_parse(const char* json_text, kc_complex** out);
KC_API kc_status kc_complex_read_file(const char* path, kc_complex** out);
/* Parse and validate; violations give KC_ERR_VALIDATION. */
KC_API kc_status kc_complex_load_file(const char* path, kc_complex** out);
KC_API kc_status kc_complex_staircase(int64_t n, kc_complex** out);
KC_API kc_status kc_complex_borromean(kc_complex** out);
KC_API void kc_complex_free(kc_complex* c);

KC_API kc_status kc_complex_size(const kc_complex* c, size_t* out);
/* *violations receives the count; *messages (optional) one violation per line. */
KC_API kc_status kc_complex_validate(const kc_complex* c, size_t* violations, char** messages);
KC_API kc_status kc_complex_to_json(const kc_complex* c, char** out);
KC_API kc_status kc_complex_total_homology_rank(const kc_complex* c, uint64_t* out);
KC_API kc_status kc_complex_ell(const kc_complex* c, int64_t s, uint64_t* out);
KC_API kc_status kc_complex_restriction_rank(const kc_complex* c, int64_t s1, int64_t s2, uint64_t* out);

/* ---- rank vectors and closed forms --------------------------------------- */

KC_API kc_status kc_rank_vector_parse(const char* text, kc_rank_vector** out);
KC_API kc_status kc_rank_vector_create(const uint64_t* ell, size_t len, kc_rank_vector** out);
KC_API void kc_rank_vector_free(kc_rank_vector* v);

typedef struct kc_rank_summary {
  uint64_t h_inf;
  uint64_t h_minus_one;
  uint64_t y_one;
  uint64_t gap;
  uint64_t genus;
  uint64_t kernel_d1;
} kc_rank_summary;

KC_API kc_status kc_rank_summary_compute(const kc_rank_vector* v, kc_rank_summary* out);
KC_API kc_status kc_y_pq(const kc_rank_vector* v, int64_t p, int64_t q, uint64_t* out);
KC_API kc_status kc_integer_surgery_rank(const kc_rank_vector* v, int64_t n, uint64_t* out);

typedef struct kc_surgery_params {
  uint64_t r;
  uint64_t s;
  uint64_t x;
  uint64_t w;
} kc_surgery_params;

KC_API kc_status kc_surgery_params_compute(const kc_rank_vector* v, uint64_t h0, kc_surgery_params* out);

/* ---- dual-knot cones ----------------------------------------------------- */

KC_API kc_status kc_dual_knot_rank(const kc_complex* c, int64_t n, int64_t s, uint64_t* out);
/* hf_rank may be NULL (no verdict). */
KC_API kc_status kc_dual_knot_table(const kc_complex* c, int64_t n, const uint64_t* hf_rank, kc_cone_report** out);
/* hf_rank may be NULL: m is assumed when m >= 2n-1, otherwise no verdict. */
KC_API kc_status kc_torus_report(int64_t n, int64_t m, const uint64_t* hf_rank, kc_cone_report** out);
KC_API void kc_cone_report_free(kc_cone_report* r);
KC_API kc_status kc_cone_report_total(const kc_cone_report* r, uint64_t* out);
/* *out is 1 (simple), 0 (not simple) or -1 (no verdict). */
KC_API kc_status kc_cone_report_simple(const kc_cone_report* r, int* out);
KC_API kc_status kc_cone_report_format(const kc_cone_report* r, kc_format format, char** out);

KC_API kc_status kc_torus_scan(int64_t n_max, int64_t m_max, char** tsv_out);

/* ---- rational surgery cube ----------------------------------------------- */

typedef struct kc_cube_request {
  uint64_t r;
  uint64_t s;
  uint64_t x;
  uint64_t h0;
  int64_t p;
  int64_t q;
  uint64_t seed;
} kc_cube_request;

typedef struct kc_cube_result {
  uint64_t w;             /* 2x - h0 */
  uint64_t total_dim;
  uint64_t rank;
  uint64_t homology_rank;
  uint64_t rank_formula;  /* q(2r+s) + p x */
  uint64_t y_pq;          /* p h_inf + q (h_-1 - h_inf) with h_inf = 2r+s, h_-1 = 2r+s+w */
  int squares_to_zero;
} kc_cube_result;

KC_API kc_status kc_cube_run(const kc_cube_request* request, kc_cube_result* out);

/* ---- Borromean knot ------------------------------------------------------ */

KC_API kc_status kc_borromean_report(char** json_out);

#ifdef __cplusplus
}
#endif

#endif /* KNOTCONE_H */
