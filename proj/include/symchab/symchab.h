/* C interface to the symchab library. Every call returns a status code; on failure
 * symchab_last_error() describes the problem (per thread). Strings returned through
 * char** parameters are owned by the caller and released with symchab_string_free. */
#ifndef SYMCHAB_H
#define SYMCHAB_H

#include <stdint.h>

#if defined(_WIN32)
#define SYMCHAB_API __declspec(dllexport)
#else
#define SYMCHAB_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum symchab_status {
  SYMCHAB_OK = 0,
  SYMCHAB_ERR_NULL_PTR = 1,
  SYMCHAB_ERR_DOMAIN = 2,
  SYMCHAB_ERR_UNSUPPORTED = 3,
  SYMCHAB_ERR_PARSE = 4,
  SYMCHAB_ERR_RANK_CONDITION = 5,
  SYMCHAB_ERR_VERIFY_FAILED = 6,
  SYMCHAB_ERR_UNKNOWN_NAME = 7,
  SYMCHAB_ERR_INCONCLUSIVE = 8,
  SYMCHAB_ERR_BUDGET = 9,
  SYMCHAB_ERR_INTERNAL = 99
} symchab_status;

typedef struct symchab_series symchab_series;
typedef struct symchab_box symchab_box;
typedef struct symchab_poly symchab_poly;
typedef struct symchab_report symchab_report;

SYMCHAB_API const char* symchab_version(void);
SYMCHAB_API const char* symchab_last_error(void);
SYMCHAB_API void symchab_string_free(char* s);

/* Pure series and boxes, from their JSON forms. */
SYMCHAB_API int symchab_series_parse(const char* json, symchab_series** out);
SYMCHAB_API void symchab_series_free(symchab_series* f);
SYMCHAB_API int symchab_box_parse(const char* json, symchab_box** out);
SYMCHAB_API void symchab_box_free(symchab_box* box);

/* Tropical queries. Results are JSON envelopes {"payload": ..., "notes": [...]}.
 * `w_json` is an array of rationals such as ["1/2", "3"]. */
SYMCHAB_API int symchab_vrt(const symchab_series* f, const char* w_json, char** out_json);
SYMCHAB_API int symchab_vrt_box(const symchab_series* f, const symchab_box* box, char** out_json);
SYMCHAB_API int symchab_trop(const symchab_series* f, const symchab_box* box, char** out_json);
SYMCHAB_API int symchab_aux(const symchab_series* f, const symchab_box* box, char** out_json);

SYMCHAB_API int symchab_disk_window(int64_t k, int64_t e, int64_t p, int64_t* out);
/* has_rank = 0 gives the general width, otherwise the rank-favorable width for `rank`. */
SYMCHAB_API int symchab_annulus_window(int64_t g, int64_t e, int64_t p, int has_rank, int64_t rank, int64_t* out);

/* Polynomials in g, t, r. */
SYMCHAB_API int symchab_poly_parse(const char* json, symchab_poly** out);
SYMCHAB_API int symchab_aggregate_poly(int64_t p, int hyperelliptic, symchab_poly** out);
SYMCHAB_API int symchab_uniform_poly(int hyperelliptic, symchab_poly** out);
SYMCHAB_API int symchab_eliminate_t(const symchab_poly* poly, symchab_poly** out);
SYMCHAB_API int symchab_poly_equal(const symchab_poly* a, const symchab_poly* b, int* out);
SYMCHAB_API int symchab_poly_to_string(const symchab_poly* poly, char** out);
SYMCHAB_API int symchab_poly_to_json(const symchab_poly* poly, char** out);
/* g, t, r are rational strings; the value comes back as "num/den". */
SYMCHAB_API int symchab_poly_eval(const symchab_poly* poly, const char* g, const char* t, const char* r, char** out);
SYMCHAB_API void symchab_poly_free(symchab_poly* poly);

/* Bounds. Both return JSON envelopes. */
SYMCHAB_API int symchab_uniform_bound(int64_t g, int64_t r, int hyperelliptic, char** out_json);
SYMCHAB_API int symchab_cases(int64_t g, int64_t t, int64_t p, int64_t r, int hyperelliptic, char** out_json);

/* Verification suites. A failing suite still returns SYMCHAB_OK; inspect `passed`. */
SYMCHAB_API int symchab_verify(const char* suite, uint64_t seed, symchab_report** out);
SYMCHAB_API int symchab_report_passed(const symchab_report* report, int* passed);
SYMCHAB_API int symchab_report_json(const symchab_report* report, char** out_json);
SYMCHAB_API int symchab_report_text(const symchab_report* report, char** out_text);
SYMCHAB_API void symchab_report_free(symchab_report* report);

/* Mixed volumes. `input_json` is {"P1": {"vertices": ...}, "P2": {"vertices": ...}}
 * or {"a": [[a11, a12], [a21, a22]]} for the disk quadrilaterals. */
SYMCHAB_API int symchab_mv(const char* input_json, char** out_json);

/* Brute-force oracles. `system_json` is {"q": ..., "f1": [...], "f2": [...]}. */
SYMCHAB_API int symchab_oracle_system(const char* system_json, char** out_json);
SYMCHAB_API int symchab_oracle_delta(const char* r, int64_t k, int64_t p, int64_t cap, char** out_json);
SYMCHAB_API int symchab_oracle_np(const char* r, int64_t n0, int64_t p, int64_t cap, char** out_json);

#ifdef __cplusplus
}
#endif

#endif /* SYMCHAB_H */
