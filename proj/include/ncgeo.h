/*
 * ncgeo — exact symbolic engine for pseudo-Riemannian calculi over the
 * noncommutative torus and 3-sphere.
 *
 * C interface to the shared library: opaque engine handles, status codes,
 * and JSON strings for structured data. All returned strings are allocated
 * by the library and must be released with ncg_string_free().
 *
 * Thread-safety: distinct engines may be used concurrently; a single engine
 * is not synchronized.
 */
#ifndef NCGEO_H
#define NCGEO_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ncg_status {
  NCG_OK = 0,
  NCG_ERR_INVALID_ARGUMENT = 1,
  NCG_ERR_PARSE = 2,
  NCG_ERR_MIXED_ALGEBRA = 3,
  NCG_ERR_RANK_MISMATCH = 4,
  NCG_ERR_NOT_DIVISIBLE = 5,
  NCG_ERR_NOT_LIFTABLE = 6,
  NCG_ERR_NOT_PSEUDO_INVERSE = 7,
  NCG_ERR_IRREGULAR_DENOMINATOR = 8,
  NCG_ERR_KOSZUL_UNSATISFIED = 9,
  NCG_ERR_NOT_IN_TANGENT_MODULE = 10,
  NCG_ERR_NOT_EXPANDABLE = 11,
  NCG_ERR_INTERNAL = 12
} ncg_status;

typedef struct ncg_engine ncg_engine;

/* Library version string, static storage. */
const char* ncg_version(void);

/* Stable name for a status code, static storage. */
const char* ncg_status_name(ncg_status status);

/* target is "torus" or "sphere". */
ncg_status ncg_engine_create(const char* target, ncg_engine** out_engine);
void ncg_engine_destroy(ncg_engine* engine);

/* Message for the last failing call on this engine; static storage tied to
 * the engine, valid until the next call. */
const char* ncg_engine_last_error(const ncg_engine* engine);

/*
 * Parses an expression in the engine's algebra and returns a JSON document
 * {"target", "expression", "normal_form", "numeric"?}.
 *
 * opts_json may be NULL, or a JSON object with any of:
 *   "theta":   array of "p/N" strings      (representation sample set)
 *   "lambda2": array of "a/b" strings      (sphere representations)
 *   "dim":     integer multiple of N
 *   "numeric": bool — include matrix evaluations (implied by theta/lambda2/dim)
 */
ncg_status ncg_eval(ncg_engine* engine, const char* expression, const char* opts_json,
                    char** out_json);

/*
 * Runs the verification pipeline and returns the JSON report.
 * *out_all_pass (may be NULL) is set to 1 iff every check passed.
 *
 * opts_json may be NULL, or a JSON object with any of:
 *   "inject_fault": one of the registered fault names
 *   "theta", "lambda2", "dim" as for ncg_eval
 *   "tol": number — oracle tolerance (default 1e-10)
 */
ncg_status ncg_verify(ncg_engine* engine, const char* opts_json, int* out_all_pass,
                      char** out_report_json);

/* Renders a report or eval JSON document as markdown. */
ncg_status ncg_report_to_markdown(const char* report_json, char** out_markdown);

void ncg_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif /* NCGEO_H */
