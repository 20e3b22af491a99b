/* C interface to the spanalex library. */
#ifndef SPANALEX_H
#define SPANALEX_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum sa_status {
  SA_OK = 0,
  SA_INVALID_INPUT = 1,
  SA_SYNTAX_ERROR = 2,
  SA_BOUNDARY_MISMATCH = 3,
  SA_DIMENSION_MISMATCH = 4,
  SA_DIVISION_BY_ZERO = 5,
  SA_ZERO_POLYNOMIAL = 6,
  SA_ZERO_EVALUATION_POINT = 7,
  SA_POLE_AT_SPECIALIZATION = 8,
  SA_NOT_A_KNOT = 9,
  SA_INTERNAL_INCONSISTENCY = 10,
  SA_CONVERGENCE_FAILURE = 11,
  SA_INFINITE_SLOPE = 12,
  SA_NOT_RATIONAL_SHAPE = 13,
  SA_TRIVIAL_COLORING = 14,
  SA_DEGENERATE_PLANE = 15,
  /* the computation ran but a cross-check or theorem check failed */
  SA_VERIFICATION_FAILED = 32,
  SA_NULL_ARGUMENT = 33,
  SA_INTERNAL = 34
} sa_status;

typedef struct sa_result sa_result;

typedef struct sa_options {
  double tol;        /* root-finder tolerance */
  double circle_eps; /* allowed | |t| - 1 | */
  double guard;      /* margin for Re(t) > -1 */
  unsigned jobs;     /* worker threads for verify */
} sa_options;

sa_options sa_options_default(void);

/* Every entry point stores a new result in *out, also on
   SA_VERIFICATION_FAILED. On other errors *out is NULL and the message is
   available from sa_last_error_message on the calling thread. opts may be
   NULL for the defaults. */
sa_status sa_alex_rational(const char* fraction, const char* route, sa_result** out);
sa_status sa_alex_pretzel(const char* spec, const char* route, sa_result** out);
sa_status sa_alex_tangle(const char* expr, sa_result** out);
/* kind: "rational" or "pretzel"; check: NULL, "", "circle" or "hoste" */
sa_status sa_roots(const char* kind, const char* spec, const char* check, const sa_options* opts, sa_result** out);
sa_status sa_classify(const char* expr, sa_result** out);
sa_status sa_coloring(const char* expr, long long x, long long y, sa_result** out);
sa_status sa_even_cf(const char* fraction, sa_result** out);
sa_status sa_verify(const char* family, size_t samples, uint64_t seed, long long bound, const sa_options* opts,
                    sa_result** out);

/* Strings are owned by the result. */
const char* sa_result_json(const sa_result* r);
const char* sa_result_text(const sa_result* r);
const char* sa_result_csv(const sa_result* r);
int sa_result_passed(const sa_result* r);
void sa_result_free(sa_result* r);

const char* sa_last_error_message(void);
const char* sa_status_name(sa_status s);
const char* sa_version(void);

#ifdef __cplusplus
}
#endif

#endif
