#ifndef BASEL_BASEL_H
#define BASEL_BASEL_H

/*
 * C interface to the basel workbench.
 *
 * Every fallible function returns a basel_status. On failure the thread-local
 * message from basel_last_error() describes the problem. Objects are opaque
 * handles released with the matching *_destroy function; a NULL handle is
 * accepted by every destroy function.
 *
 * Text outputs use the (buffer, capacity, needed) convention: *needed always
 * receives the length excluding the terminator; if capacity is too small the
 * call returns BASEL_ERR_BUFFER_TOO_SMALL and writes nothing.
 */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define BASEL_API __declspec(dllexport)
#elif defined(__GNUC__)
#define BASEL_API __attribute__((visibility("default")))
#else
#define BASEL_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum basel_status {
    BASEL_OK = 0,
    BASEL_ERR_INVALID_ARGUMENT = 1,
    BASEL_ERR_DOMAIN = 2,
    BASEL_ERR_NUMERICAL = 3,
    BASEL_ERR_BUFFER_TOO_SMALL = 4,
    BASEL_ERR_IO = 5,
    BASEL_ERR_INTERNAL = 6
} basel_status;

typedef enum basel_format {
    BASEL_FORMAT_CSV = 0,
    BASEL_FORMAT_JSON = 1,
    BASEL_FORMAT_TEXT = 2
} basel_format;

typedef struct basel_testfn basel_testfn;
typedef struct basel_table basel_table;

BASEL_API const char* basel_version(void);
BASEL_API const char* basel_status_string(basel_status status);
/* Message of the last failure on this thread; "" if none. */
BASEL_API const char* basel_last_error(void);

/* ---- exact zeta values ------------------------------------------------- */

/* zeta(two_k) = (num/den) pi^two_k, written as "num/den". use_oracle selects
 * the Bernoulli route instead of the antiderivative ladder. */
BASEL_API basel_status basel_zeta_even_rational(unsigned two_k, int use_oracle, char* buffer, size_t capacity,
                                                size_t* needed);
BASEL_API basel_status basel_zeta_even_double(unsigned two_k, double* out);

/* ---- kernels ----------------------------------------------------------- */

BASEL_API basel_status basel_dirichlet_sum(uint32_t n, double x, double* out);
BASEL_API basel_status basel_dirichlet_compact(uint32_t n, double x, double* out);
BASEL_API basel_status basel_kernel_normalization(uint32_t n, double tol, double* value, double* error_estimate);

/* ---- quadrature -------------------------------------------------------- */

BASEL_API basel_status basel_sinc_truncated(unsigned n, double tol, double* value, double* error_estimate);

/* ---- test functions ---------------------------------------------------- */

BASEL_API basel_status basel_testfn_plateau(double inner, double outer, basel_testfn** out);
/* Plateau bump equal to 1 on [-pi, pi] and 0 beyond 3pi/2. */
BASEL_API basel_status basel_testfn_standard_plateau(basel_testfn** out);
BASEL_API basel_status basel_testfn_gauss(double center, double radius, basel_testfn** out);
BASEL_API basel_status basel_testfn_phi_tilde(const basel_testfn* phi, basel_testfn** out);
BASEL_API basel_status basel_testfn_eval(const basel_testfn* fn, double x, double* out);
BASEL_API basel_status basel_testfn_support(const basel_testfn* fn, double* lower, double* upper);
BASEL_API void basel_testfn_destroy(basel_testfn* fn);

BASEL_API basel_status basel_sigma(double x, double* out);

/* ---- distributional actions and Fourier sums --------------------------- */

BASEL_API basel_status basel_delta0_partial_action(const basel_testfn* phi, uint64_t n, double tol, double* out);
BASEL_API basel_status basel_delta0_comb_action(const basel_testfn* phi, double* out);
BASEL_API basel_status basel_deltaN_action(const basel_testfn* phi, uint64_t n, double tol, double* out);
BASEL_API basel_status basel_fourier_partial_delta1(uint64_t n, double x, double* out);
BASEL_API basel_status basel_fourier_partial_delta2(uint64_t n, double x, double* out);
BASEL_API double basel_delta1_closed(double x);
BASEL_API double basel_delta2_closed(double x);

/* ---- experiment tables ------------------------------------------------- */

BASEL_API basel_status basel_table_zeta(unsigned max_k, int oracle, basel_table** out);
BASEL_API basel_status basel_table_kernel(uint32_t n, size_t samples, double xmin, double xmax, basel_table** out);
BASEL_API basel_status basel_table_action(const basel_testfn* phi, const uint64_t* orders, size_t count, double tol,
                                          basel_table** out);
BASEL_API basel_status basel_table_comb(const basel_testfn* phi, uint64_t n, double tol, basel_table** out);
BASEL_API basel_status basel_table_fourier(unsigned order, uint64_t n, size_t samples, double xmin, double xmax,
                                           basel_table** out);
BASEL_API basel_status basel_table_sinc(unsigned n_max, double tol, basel_table** out);

BASEL_API size_t basel_table_rows(const basel_table* table);
BASEL_API size_t basel_table_columns(const basel_table* table);
/* NULL when out of range. Valid until the table is destroyed. */
BASEL_API const char* basel_table_column_name(const basel_table* table, size_t column);
/* BASEL_ERR_INVALID_ARGUMENT for non-numeric (exact or text) cells. */
BASEL_API basel_status basel_table_cell_double(const basel_table* table, size_t row, size_t column, double* out);
BASEL_API basel_status basel_table_cell_text(const basel_table* table, size_t row, size_t column,
                                             basel_format format, char* buffer, size_t capacity, size_t* needed);
BASEL_API basel_status basel_table_render(const basel_table* table, basel_format format, char* buffer,
                                          size_t capacity, size_t* needed);
/* Write the rendering to `path`, or to standard output when path is NULL. */
BASEL_API basel_status basel_table_write(const basel_table* table, basel_format format, const char* path);
BASEL_API void basel_table_destroy(basel_table* table);

#ifdef __cplusplus
}
#endif

#endif /* BASEL_BASEL_H */
