/* C interface to the specbound library.
 *
 * Every fallible call returns an sb_status; on failure the message is
 * available from sb_last_error() on the same thread until the next call.
 * Objects are opaque handles released with their matching *_free function.
 * Matrix entries are passed row-major as separate real and imaginary arrays.
 */
#ifndef SPECBOUND_SPECBOUND_H
#define SPECBOUND_SPECBOUND_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(SPECBOUND_BUILDING)
#    define SB_API __declspec(dllexport)
#  else
#    define SB_API __declspec(dllimport)
#  endif
#else
#  define SB_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum sb_status {
  SB_OK = 0,
  SB_ERR_INVALID_ARGUMENT = 1,
  SB_ERR_DIMENSION = 2,
  SB_ERR_NOT_HERMITIAN = 3,
  SB_ERR_NO_CONVERGENCE = 4,
  SB_ERR_IO = 5,
  SB_ERR_PARSE = 6,
  SB_ERR_UNSUPPORTED = 7,
  SB_ERR_DEGENERATE = 8,
  SB_ERR_NUMERICAL = 9,
  SB_ERR_INTERNAL = 10
} sb_status;

typedef enum sb_format {
  SB_FORMAT_TABLE = 0,
  SB_FORMAT_CSV = 1,
  SB_FORMAT_JSON = 2
} sb_format;

typedef enum sb_spectrum {
  SB_SPECTRUM_SPIKED = 0,
  SB_SPECTRUM_LINEAR = 1
} sb_spectrum;

typedef struct sb_matrix sb_matrix;
typedef struct sb_report sb_report;

SB_API const char* sb_version(void);
SB_API const char* sb_status_string(sb_status status);
/* Message of the last failed call on this thread ("" if none). */
SB_API const char* sb_last_error(void);

/* ---------------------------------------------------------------- matrices */

/* `imag` may be NULL for a real matrix. Either dimension may be zero. */
SB_API sb_status sb_matrix_create(size_t rows, size_t cols, const double* real,
                                  const double* imag, sb_matrix** out);
SB_API sb_status sb_matrix_read_mm(const char* path, sb_matrix** out);
/* hermitian != 0 writes the lower triangle with `hermitian` symmetry. */
SB_API sb_status sb_matrix_write_mm(const sb_matrix* m, const char* path, int hermitian);
SB_API size_t sb_matrix_rows(const sb_matrix* m);
SB_API size_t sb_matrix_cols(const sb_matrix* m);
SB_API sb_status sb_matrix_get(const sb_matrix* m, size_t row, size_t col, double* real,
                               double* imag);
SB_API void sb_matrix_free(sb_matrix* m);

/* ------------------------------------------------------------------ bounds */

/* Eigenvalue bounds for A split after `split` rows/columns. */
SB_API sb_status sb_eigen_bound(const sb_matrix* a, size_t split, int oracle, sb_report** out);

/* Singular value bounds for B split after `row_split` rows and `col_split`
 * columns. Splits leaving a diagonal block empty produce the one-sided
 * [G E] report instead. */
SB_API sb_status sb_singular_bound(const sb_matrix* b, size_t row_split, size_t col_split,
                                   int oracle, sb_report** out);

/* Ritz value certification for the orthonormal columns of x1. */
SB_API sb_status sb_certify(const sb_matrix* a, const sb_matrix* x1, int oracle,
                            sb_report** out);

typedef struct sb_demo_options {
  size_t dim;
  size_t steps;
  size_t select; /* 0 keeps every Ritz pair */
  uint64_t seed;
  sb_spectrum spectrum;
  double noise;
  int oracle;
} sb_demo_options;

/* dim 100, steps 15, select 0, seed 0, spiked, noise 0.01, oracle on. */
SB_API void sb_demo_options_init(sb_demo_options* options);
SB_API sb_status sb_lanczos_demo(const sb_demo_options* options, sb_report** out);

typedef struct sb_fuzz_options {
  size_t trials;
  size_t max_dim;
  uint64_t seed;
} sb_fuzz_options;

/* trials 10000, max_dim 12, seed 0. */
SB_API void sb_fuzz_options_init(sb_fuzz_options* options);
/* `violations` (optional) receives the total violation count. */
SB_API sb_status sb_fuzz(const sb_fuzz_options* options, sb_report** out, size_t* violations);

/* ----------------------------------------------------------------- reports */

SB_API const char* sb_report_kind(const sb_report* r);
SB_API size_t sb_report_row_count(const sb_report* r);
SB_API size_t sb_report_column_count(const sb_report* r);
SB_API const char* sb_report_column_name(const sb_report* r, size_t column);
/* Numeric cell by column name. Empty cells give SB_ERR_INVALID_ARGUMENT. */
SB_API sb_status sb_report_get(const sb_report* r, size_t row, const char* column, double* out);
SB_API sb_status sb_report_summary(const sb_report* r, const char* key, double* out);

SB_API void sb_report_set_seed(sb_report* r, uint64_t seed);
/* Stamps the report with the current UTC time. */
SB_API void sb_report_stamp(sb_report* r);

/* *out is NUL-terminated and released with sb_string_free. */
SB_API sb_status sb_report_render(const sb_report* r, sb_format format, char** out);
SB_API void sb_report_free(sb_report* r);
SB_API void sb_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif /* SPECBOUND_SPECBOUND_H */
