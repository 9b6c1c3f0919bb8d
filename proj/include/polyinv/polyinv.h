/* C interface to the polyinv library.
 *
 * Every report function writes a NUL-terminated JSON document to *report that
 * the caller releases with pinv_string_free. On failure the function returns a
 * nonzero status, *report is left NULL and pinv_last_error() describes the
 * failure as JSON. Errors are tracked per thread. */
#ifndef POLYINV_H
#define POLYINV_H

#include <stddef.h>
#include <stdint.h>

#if defined(POLYINV_BUILDING)
#define PINV_API __attribute__((visibility("default")))
#else
#define PINV_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum pinv_status {
  PINV_OK = 0,
  PINV_ERR_INVALID_ARGUMENT,
  PINV_ERR_DIMENSION,
  PINV_ERR_PARSE,
  PINV_ERR_NOT_INVERTIBLE,
  PINV_ERR_NOT_INVARIANT,
  PINV_ERR_NOT_CLOSED,
  PINV_ERR_ZERO_EIGENVALUE,
  PINV_ERR_UNDEFINED_RESULTANT,
  PINV_ERR_UNSUPPORTED_SYMBOLIC,
  PINV_ERR_NUMERICAL,
  PINV_ERR_INVALID_START,
  PINV_ERR_INCONCLUSIVE_POWER_CLOSURE,
  PINV_ERR_UNSUPPORTED,
  PINV_ERR_NON_COMMUTING,
  PINV_ERR_INTERNAL
} pinv_status;

typedef enum pinv_backend { PINV_BACKEND_EXACT = 0, PINV_BACKEND_FLOAT = 1 } pinv_backend;

typedef struct pinv_config pinv_config;
typedef struct pinv_exppoly pinv_exppoly;
typedef struct pinv_space pinv_space;
typedef struct pinv_group pinv_group;

PINV_API const char* pinv_version(void);
PINV_API const char* pinv_status_name(pinv_status status);

/* JSON error object of the last failed call on this thread, or NULL. */
PINV_API const char* pinv_last_error(void);
PINV_API void pinv_string_free(char* s);

/* Run configuration. Defaults: seed 0, exact backend, tol 1e-9, 2000
 * samples, closure cap 64. Setters reject tol <= 0, samples = 0, cap = 0. */
PINV_API pinv_config* pinv_config_new(void);
PINV_API void pinv_config_free(pinv_config* cfg);
PINV_API pinv_status pinv_config_set_seed(pinv_config* cfg, uint64_t seed);
PINV_API pinv_status pinv_config_set_backend(pinv_config* cfg, pinv_backend backend);
PINV_API pinv_status pinv_config_set_tol(pinv_config* cfg, double tol);
PINV_API pinv_status pinv_config_set_samples(pinv_config* cfg, size_t samples);
PINV_API pinv_status pinv_config_set_cap(pinv_config* cfg, size_t cap);
/* Grid spacing for interior tests; <= 0 restores the relative default. */
PINV_API pinv_status pinv_config_set_eps(pinv_config* cfg, double eps);

/* dim = 0 infers the dimension from the highest variable index. */
PINV_API pinv_status pinv_exppoly_parse(const char* text, size_t dim, pinv_exppoly** out);
PINV_API pinv_status pinv_exppoly_print(const pinv_exppoly* f, char** out);
PINV_API size_t pinv_exppoly_dim(const pinv_exppoly* f);
PINV_API int pinv_exppoly_equal(const pinv_exppoly* a, const pinv_exppoly* b);
PINV_API void pinv_exppoly_free(pinv_exppoly* f);

/* Space files use the function-space JSON format. */
PINV_API pinv_status pinv_space_from_json(const char* json, pinv_space** out);
PINV_API pinv_status pinv_space_span(const pinv_exppoly* const* generators, size_t count, pinv_space** out);
PINV_API pinv_status pinv_space_to_json(const pinv_space* v, char** out);
PINV_API size_t pinv_space_dim(const pinv_space* v);
PINV_API void pinv_space_free(pinv_space* v);

/* "SO(2)", "O(1,1)", "Sp(4)", "Hyp(2)", ... or a JSON group object. */
PINV_API pinv_status pinv_group_parse(const char* spec, pinv_group** out);
PINV_API pinv_status pinv_group_describe(const pinv_group* g, char** out);
PINV_API size_t pinv_group_dim(const pinv_group* g);
PINV_API void pinv_group_free(pinv_group* g);

/* Vectors are comma separated rationals ("1/2,-3"); lists of vectors are
 * separated by ';' or newlines. Matrices are row-major rational CSV.
 * *concluded (may be NULL) receives 1 when the report reaches its
 * conclusion and 0 when it refuses or is inconclusive. */

PINV_API pinv_status pinv_classify(const pinv_exppoly* f, const pinv_config* cfg, char** report, int* concluded);
PINV_API pinv_status pinv_diff(const pinv_exppoly* f, const char* steps, const pinv_config* cfg, char** report,
                               int* concluded);
/* group may be NULL for the translation closure alone. */
PINV_API pinv_status pinv_closure(const pinv_exppoly* f, const pinv_group* group, const pinv_config* cfg,
                                  char** report, int* concluded);
/* Point dump of Gz0, or of Lambda = Gz0 - Gz0 when lambda is nonzero.
 * csv selects CSV instead of JSON. */
PINV_API pinv_status pinv_orbit(const pinv_group* group, const char* z0, int lambda, int csv, const pinv_config* cfg,
                                char** report);
PINV_API pinv_status pinv_interior(const pinv_group* group, const char* z0, const pinv_config* cfg, char** report,
                                   int* concluded);
/* z1 may be NULL. */
PINV_API pinv_status pinv_structure(const pinv_group* group, const char* z0, const char* z1, const pinv_config* cfg,
                                    char** report, int* concluded);
PINV_API pinv_status pinv_annihilate(const pinv_space* v, const pinv_group* group, const char* z0,
                                     const pinv_config* cfg, char** report, int* concluded);
/* ks is a comma separated list of integers; h may be NULL for e_1. */
PINV_API pinv_status pinv_dilate(const pinv_space* v, const char* ks, const char* h, const pinv_config* cfg,
                                 char** report, int* concluded);
PINV_API pinv_status pinv_montel(const pinv_exppoly* f, const char* steps, unsigned order, const pinv_config* cfg,
                                 char** report, int* concluded);
PINV_API pinv_status pinv_bounds(size_t dim, size_t d, const pinv_config* cfg, char** report, int* concluded);
PINV_API pinv_status pinv_group_check(const pinv_group* group, const char* matrix_csv, const pinv_config* cfg,
                                      char** report, int* concluded);
/* Either a set of elements ("1,-1", each "c" or "c:e:theta" for
 * c*exp(e)*exp(2 pi i theta)) or, when as_polynomial is nonzero, the
 * coefficients of a rational polynomial from the constant term up. */
PINV_API pinv_status pinv_power_closure(const char* elements, int as_polynomial, const char* exponents,
                                        const pinv_config* cfg, char** report, int* concluded);
/* The exact backend uses the rational CSVs directly; the float backend
 * converts them to doubles and matches eigenvalues within tol. */
PINV_API pinv_status pinv_spectra(const char* t_csv, const char* s_csv, const pinv_config* cfg, char** report,
                                  int* concluded);
PINV_API pinv_status pinv_kronecker(size_t d, unsigned n, const pinv_config* cfg, char** report);

#ifdef __cplusplus
}
#endif

#endif
