/*
 * C interface to the spectra library.
 *
 * Structures live behind opaque handles that the caller releases with the
 * matching *_free function. Every fallible call returns a spectra_status;
 * on failure spectra_last_error() describes the violated invariant and its
 * witness (thread-local, valid until the next call on the same thread).
 * Strings returned through char** out-parameters are heap-allocated and must
 * be released with spectra_string_free.
 */
#ifndef SPECTRA_SPECTRA_H
#define SPECTRA_SPECTRA_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(SPECTRA_BUILDING_LIBRARY)
#    define SPECTRA_API __declspec(dllexport)
#  else
#    define SPECTRA_API __declspec(dllimport)
#  endif
#else
#  define SPECTRA_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum spectra_status {
  SPECTRA_OK = 0,
  SPECTRA_ERR_NOT_CLOSED = 1,
  SPECTRA_ERR_NO_IDENTITY = 2,
  SPECTRA_ERR_NOT_ASSOCIATIVE = 3,
  SPECTRA_ERR_NOT_LATIN = 4,
  SPECTRA_ERR_INCOMPATIBLE_ORDER = 5,
  SPECTRA_ERR_MALFORMED_VECTOR = 6,
  SPECTRA_ERR_INVALID_INVARIANTS = 7,
  SPECTRA_ERR_NOT_NORMAL = 8,
  SPECTRA_ERR_NOT_ABELIAN = 9,
  SPECTRA_ERR_NOT_NILPOTENT = 10,
  SPECTRA_ERR_NOT_CLASS2 = 11,
  SPECTRA_ERR_ORDER_OVERFLOW = 12,
  SPECTRA_ERR_UNKNOWN_NAME = 13,
  SPECTRA_ERR_PARAM_OUT_OF_RANGE = 14,
  SPECTRA_ERR_CAP_EXCEEDED = 15,
  SPECTRA_ERR_BUDGET_EXCEEDED = 16,
  SPECTRA_ERR_EMPTY_FAMILY = 17,
  SPECTRA_ERR_PARSE = 18,
  SPECTRA_ERR_INVALID_ARGUMENT = 19,
  SPECTRA_ERR_INTERNAL = 99
} spectra_status;

typedef struct spectra_structure spectra_structure;

typedef enum spectra_kind { SPECTRA_GROUP = 0, SPECTRA_RING = 1 } spectra_kind;

/* Process-wide caps; zero fields keep their current value. */
typedef struct spectra_limits {
  uint64_t order_cap;
  uint64_t table_threshold;
  uint64_t general_order_cap;
  uint64_t bilinear_order_cap;
  uint64_t candidate_budget;
} spectra_limits;

typedef struct spectra_ring_filter {
  int associative;
  int commutative;
  int antisymmetric;
  int nilpotent;
  int max_class; /* 0 = no bound */
} spectra_ring_filter;

SPECTRA_API const char* spectra_version(void);
SPECTRA_API const char* spectra_status_name(spectra_status status);
SPECTRA_API const char* spectra_last_error(void);
SPECTRA_API void spectra_string_free(char* s);

SPECTRA_API spectra_status spectra_set_limits(const spectra_limits* limits);
SPECTRA_API void spectra_get_limits(spectra_limits* out);

/* Loading and saving. JSON output is canonical (sorted keys, compact). */
SPECTRA_API spectra_status spectra_structure_from_json(const char* json, spectra_structure** out);
SPECTRA_API spectra_status spectra_catalog(const char* name, spectra_structure** out);
SPECTRA_API spectra_status spectra_catalog_list(char** out_text);
SPECTRA_API spectra_status spectra_structure_to_json(const spectra_structure* s, char** out_json);
SPECTRA_API void spectra_structure_free(spectra_structure* s);

SPECTRA_API spectra_kind spectra_structure_kind(const spectra_structure* s);
SPECTRA_API uint64_t spectra_structure_order(const spectra_structure* s);

/* Probabilities, written as "p/q" in lowest terms ("1" for unity).
 * Groups: poly is ignored; method is "brute" (default when NULL) or "classes".
 * Rings: f(X,Y) = a XY + b YX. */
SPECTRA_API spectra_status spectra_group_pr_c(const spectra_structure* g, const char* method,
                                              char** out_rational);
SPECTRA_API spectra_status spectra_ring_pr_f(const spectra_structure* r, int64_t a, int64_t b,
                                             char** out_rational);

/* Constructions. */
SPECTRA_API spectra_status spectra_construct_nring(const spectra_structure* ring,
                                                   spectra_structure** out_ring);
SPECTRA_API spectra_status spectra_construct_circle(const spectra_structure* ring,
                                                    spectra_structure** out_group);
SPECTRA_API spectra_status spectra_construct_commring(const spectra_structure* group,
                                                      spectra_structure** out_ring);
SPECTRA_API spectra_status spectra_construct_malcev(const spectra_structure* ring,
                                                    spectra_structure** out_group);
/* Both operands must have the same kind. */
SPECTRA_API spectra_status spectra_construct_product(const spectra_structure* first,
                                                     const spectra_structure* second,
                                                     spectra_structure** out);

/* Analysis report as JSON: order, parity, center size (groups), nilpotency
 * report, antisymmetry flags (rings). */
SPECTRA_API spectra_status spectra_analyze(const spectra_structure* s, char** out_json);

/* Spectrum reports as JSON:
 * {"family":..,"gate32":{"pass":..,"violations":[..]},"poly":"a,b",
 *  "values":[{"count":..,"p_over_q":".."}]} */
SPECTRA_API spectra_status spectra_enumerate_bilinear(const int64_t* v_invariants, size_t v_len,
                                                      const int64_t* w_invariants, size_t w_len,
                                                      int alternating, int64_t a, int64_t b,
                                                      char** out_json);
SPECTRA_API spectra_status spectra_enumerate_general(const int64_t* invariants, size_t len,
                                                     const spectra_ring_filter* filter, int64_t a,
                                                     int64_t b, char** out_json);

/* Runs a verification suite; *out_passed is 1 when it found no failure. */
SPECTRA_API spectra_status spectra_verify(const char* suite, uint64_t seed, char** out_json,
                                          int* out_passed);
/* Newline-separated suite names. */
SPECTRA_API spectra_status spectra_suite_list(char** out_text);

#ifdef __cplusplus
}
#endif

#endif /* SPECTRA_SPECTRA_H */
