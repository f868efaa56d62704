#ifndef APOLAR_APOLAR_H
#define APOLAR_APOLAR_H

/* C interface to the apolarity and splitting-type library.
 *
 * Objects are opaque handles released with their *_free function. Functions
 * return an apolar_status; on failure apolar_last_error() describes the most
 * recent error on the calling thread. Strings returned through char** are
 * heap-allocated and released with apolar_string_free. */

#include <stddef.h>
#include <stdint.h>

#if defined(APOLAR_BUILDING_LIBRARY)
#define APOLAR_API __attribute__((visibility("default")))
#else
#define APOLAR_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum apolar_status {
  APOLAR_OK = 0,
  APOLAR_PARSE_ERROR,
  APOLAR_INVALID_ARGUMENT,
  APOLAR_ZERO_POLYNOMIAL,
  APOLAR_ZERO_FORM,
  APOLAR_ZERO_POINT,
  APOLAR_DEGREE_MISMATCH,
  APOLAR_NOT_SPLIT_OVER_Q,
  APOLAR_LENGTH_TOO_LARGE,
  APOLAR_INVALID_CENTER,
  APOLAR_DEGENERATE_MAP,
  APOLAR_RANK_DEFICIENT_COMBO,
  APOLAR_REPEATED_PARAMS,
  APOLAR_UNSUPPORTED_THEOREM,
  APOLAR_PARAMETER_OUT_OF_RANGE,
  APOLAR_IO_ERROR,
  APOLAR_BUFFER_TOO_SMALL,
  APOLAR_INTERNAL_ERROR
} apolar_status;

typedef enum apolar_bundle { APOLAR_NORMAL = 0, APOLAR_TANGENT = 1 } apolar_bundle;

typedef struct apolar_form apolar_form;
typedef struct apolar_center apolar_center;

APOLAR_API const char* apolar_status_name(apolar_status s);
APOLAR_API const char* apolar_last_error(void);
APOLAR_API void apolar_string_free(char* s);

/* Binary forms: comma-separated rationals a_0..a_n in the binomial basis. */
APOLAR_API apolar_status apolar_form_parse(const char* literal, apolar_form** out);
APOLAR_API void apolar_form_free(apolar_form* f);
APOLAR_API apolar_status apolar_form_degree(const apolar_form* f, unsigned* out);
APOLAR_API apolar_status apolar_form_length(const apolar_form* f, unsigned* out);
/* {"n","s","alpha","beta","hilbert"}; operators as symbol coefficient lists. */
APOLAR_API apolar_status apolar_form_ideal_json(const apolar_form* f, char** out);
/* Canonical generalized additive decomposition as JSON. */
APOLAR_API apolar_status apolar_form_decompose_json(const apolar_form* f, char** out);

/* Centers: "n k" then k rows of n+1 rationals. */
APOLAR_API apolar_status apolar_center_parse(const char* text, apolar_center** out);
APOLAR_API apolar_status apolar_center_load(const char* path, apolar_center** out);
APOLAR_API void apolar_center_free(apolar_center* c);
APOLAR_API apolar_status apolar_center_dims(const apolar_center* c, unsigned* n, unsigned* k);
APOLAR_API apolar_status apolar_center_format(const apolar_center* c, char** out);

/* Writes the splitting (descending) into buf; *count receives its length.
 * Returns APOLAR_BUFFER_TOO_SMALL, with *count set, when capacity is short. */
APOLAR_API apolar_status apolar_splitting(const apolar_center* c, apolar_bundle which, int* buf,
                                          size_t capacity, size_t* count);
APOLAR_API apolar_status apolar_rank_at_twist_zero(const apolar_center* c, apolar_bundle which, unsigned* out);
/* Kernel dimension of the bundle map on sections twisted by j; cokernel likewise. */
APOLAR_API apolar_status apolar_section_dims(const apolar_center* c, apolar_bundle which, unsigned j,
                                             unsigned* kernel, unsigned* cokernel);
APOLAR_API apolar_status apolar_immersion_check(const apolar_center* c, int* out);
/* Codimension-two stratum label 1..5, or 0 when unclassified (k = 2, n >= 7). */
APOLAR_API apolar_status apolar_codim2_class(const apolar_center* c, int* out);
APOLAR_API apolar_status apolar_profile_json(const apolar_center* c, char** out);

/* Campaigns. height 0 selects the default. The report's counterexample count
 * is stored in *counterexamples when non-null. */
APOLAR_API apolar_status apolar_verify_json(const char* theorem_id, unsigned n, unsigned k, unsigned trials,
                                            uint64_t seed, unsigned height, int omit_timing, char** out,
                                            unsigned* counterexamples);
/* secant 0 samples unconstrained centers; otherwise centers in s-secant spaces. */
APOLAR_API apolar_status apolar_sweep(unsigned n, unsigned k, unsigned trials, uint64_t seed, unsigned height,
                                      unsigned secant, int omit_timing, char** json, char** csv,
                                      unsigned* disagreements);

/* family: "normal", "tangent" or "ramella". */
APOLAR_API apolar_status apolar_codim(const char* family, long n, long k, long r, long* out);

#ifdef __cplusplus
}
#endif

#endif
