#ifndef CMOMENT_H
#define CMOMENT_H

/* C interface to the cmoment library.
 *
 * Every function returns a cm_status. Results come back through out
 * parameters: opaque handles (free with the matching *_free) or JSON strings
 * allocated by the library (free with cm_string_free). On failure the out
 * parameter is left untouched and cm_last_error() describes the problem for
 * the calling thread. JSON formats match the library's file formats. */

#include <stddef.h>

#if defined(_WIN32)
#define CM_API __declspec(dllexport)
#else
#define CM_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum cm_status {
  CM_OK = 0,
  CM_ERR_DOMAIN = 1,
  CM_ERR_RANGE = 2,
  CM_ERR_CONVERGENCE = 3,
  CM_ERR_INVARIANT = 4,
  CM_ERR_PRECONDITION = 5,
  CM_ERR_NUMERIC = 6,
  CM_ERR_RANK_DEFICIENT = 7,
  CM_ERR_PARSE = 8,
  CM_ERR_INVALID_ARGUMENT = 9,
  CM_ERR_INTERNAL = 10
} cm_status;

typedef struct cm_measure cm_measure;   /* finite weighted atoms */
typedef struct cm_table cm_table;       /* gamma_{m,n}, 0 <= m,n <= D */
typedef struct cm_extended cm_extended; /* Gamma_{m,n}, m + n >= 0, window W */
typedef struct cm_curve cm_curve;       /* implicit p(x,y) with optional parameterization */

/* "ok", "domain", "range", ... */
CM_API const char* cm_status_name(cm_status status);
/* Message of the last failure on this thread ("" if none). */
CM_API const char* cm_last_error(void);
CM_API void cm_string_free(char* s);

/* Working precision in decimal digits for high-precision arithmetic
 * (quadrature, Hankel recovery). Default 39 (128-bit mantissa). */
CM_API cm_status cm_set_precision(unsigned digits);
CM_API unsigned cm_get_precision(void);

/* Measures */
CM_API cm_status cm_measure_from_json(const char* json, cm_measure** out);
CM_API cm_status cm_measure_to_json(const cm_measure* mu, char** out);
/* domain: "complex-plane", "punctured-plane", "unit-circle", "real-line", "real-plane" */
CM_API cm_status cm_measure_dirac(double re, double im, double weight, const char* domain,
                                  cm_measure** out);
CM_API void cm_measure_free(cm_measure* mu);
CM_API size_t cm_measure_size(const cm_measure* mu);
CM_API double cm_measure_total_mass(const cm_measure* mu);
CM_API cm_status cm_measure_atom(const cm_measure* mu, size_t i, double* re, double* im,
                                 double* weight);

CM_API cm_status cm_transport_phi(const cm_measure* nu, cm_measure** out);
CM_API cm_status cm_transport_psi(const cm_measure* mu, cm_measure** out);
CM_API cm_status cm_shift_to_horizontal_line(const cm_measure* tau, double h, cm_measure** out);
CM_API cm_status cm_product_measure(const cm_measure* mu, const cm_measure* nu,
                                    cm_measure** out);
/* axis 1: (x, y) -> x, axis 2: (x, y) -> y */
CM_API cm_status cm_marginal_transport(const cm_measure* rho, int axis, cm_measure** out);

/* Moments */
CM_API cm_status cm_discrete_moments(const cm_measure* mu, int degree, cm_table** out);
CM_API cm_status cm_trig_moments(const cm_measure* nu, int degree, char** out_json);
CM_API cm_status cm_real_moments(const cm_measure* tau, int length, char** out_json);
CM_API cm_status cm_plane_moments(const cm_measure* rho, int degree, char** out_json);
/* density_json: {"preset": "uniform"|"stieltjes"|"lognormal", ...}; returns
 * {"moments": [...], "moments_exact": [...], "error_estimates": [...]} for s_0..s_length. */
CM_API cm_status cm_density_moments(const char* density_json, int length, char** out_json);

/* Moment tables */
CM_API cm_status cm_table_from_json(const char* json, cm_table** out);
CM_API cm_status cm_table_to_json(const cm_table* t, char** out);
CM_API void cm_table_free(cm_table* t);
CM_API int cm_table_degree(const cm_table* t);
CM_API cm_status cm_table_entry(const cm_table* t, int m, int n, double* re, double* im);
/* hamburger_json: {"moments": [...]}; gamma_{m,n} = s_{m+n} */
CM_API cm_status cm_from_hamburger(const char* hamburger_json, int degree, cm_table** out);
/* herglotz_json: {"degree": D, "entries": [[n, re, im], ...]}; gamma_{m,n} = s_{m-n} */
CM_API cm_status cm_from_herglotz(const char* herglotz_json, int degree, cm_table** out);
CM_API cm_status cm_to_real2d(const cm_table* t, char** out_json);
CM_API cm_status cm_from_real2d(const char* real2d_json, cm_table** out);

CM_API cm_status cm_extended_from_json(const char* json, cm_extended** out);
CM_API cm_status cm_extended_to_json(const cm_extended* t, char** out);
CM_API void cm_extended_free(cm_extended* t);
CM_API int cm_extended_window(const cm_extended* t);
CM_API cm_status cm_extended_entry(const cm_extended* t, int m, int n, double* re, double* im);

/* Positivity: PsdReport JSON, with the matrix under "matrix" when
 * include_matrix is nonzero. */
CM_API cm_status cm_check_pd_quadrant(const cm_table* t, int d, int include_matrix,
                                      char** out_json);
CM_API cm_status cm_check_pd_halfplane(const cm_extended* t, int d, int include_matrix,
                                       char** out_json);
CM_API cm_status cm_check_pd_hankel(const char* hamburger_json, int d, int include_matrix,
                                    char** out_json);
CM_API cm_status cm_check_pd_toeplitz(const char* herglotz_json, int d, int include_matrix,
                                      char** out_json);

/* Flatness and support classes */
CM_API cm_status cm_detect_flatness(const cm_table* t, int bound, char** out_json);
CM_API cm_status cm_check_flatness(const cm_table* t, int k, int l, char** out_json);
CM_API cm_status cm_classify_flat_support(int k, int l, char** out_json);
CM_API cm_status cm_flatness_for_support(const char* support_json, int* k, int* l);

/* Extensions. nu may be NULL for the zero measure on the circle. */
CM_API cm_status cm_build_extension(const cm_measure* mu, const cm_measure* nu, int window,
                                    cm_extended** out);
/* Splits mu({0}) onto the unit-mass circle profile and builds the extension. */
CM_API cm_status cm_extension_from_measure(const cm_measure* mu, const cm_measure* profile,
                                           int window, cm_extended** out);
CM_API cm_status cm_pair_to_measure(const cm_measure* mu, const cm_measure* nu,
                                    cm_measure** out);
CM_API cm_status cm_snu2_family(const cm_measure* mu, double t, int window, cm_extended** out);
CM_API cm_status cm_restrict(const cm_extended* t, cm_table** out);
CM_API cm_status cm_is_extension(const cm_extended* big, const cm_table* t, char** out_json);
CM_API cm_status cm_quasi_det_residual(const cm_measure* mu1, const cm_measure* nu1,
                                       const cm_measure* mu2, const cm_measure* nu2, int degree,
                                       char** out_json);

/* Curves and geometry */
CM_API cm_status cm_curve_from_json(const char* json, cm_curve** out);
/* name: "line", "neil", "agnesi", "cissoid", "power", "unit-circle", "parabola";
 * params_json may be NULL for the catalog defaults. */
CM_API cm_status cm_curve_by_name(const char* name, const char* params_json, cm_curve** out);
CM_API cm_status cm_curve_to_json(const cm_curve* c, char** out);
CM_API void cm_curve_free(cm_curve* c);
CM_API cm_status cm_curve_catalog(char** out_json);
CM_API cm_status cm_localization_residual(const cm_measure* mu, const cm_curve* c,
                                          double* residual);
CM_API cm_status cm_injectivity_test(const cm_curve* c, int samples, char** out_json);
CM_API cm_status cm_collinear_through_origin(double re1, double im1, double re2, double im2,
                                             int* result);
CM_API cm_status cm_agnesi_fiber(double a, double b, double y, char** out_json);
/* Atom locations of points (x + iy) are the sample points. */
CM_API cm_status cm_zariski_density_test(const cm_measure* points, int d, char** out_json);

/* Recovery */
/* {"measure": ..., "jacobi": {"alpha": [...], "beta": [...]}}; rank_tolerance 0
 * selects the default. */
CM_API cm_status cm_recover_atomic(const char* hamburger_json, int nodes, double rank_tolerance,
                                   char** out_json);
/* {"n", "lambda", "value", "value_exact", "error_estimate", "closed_form", "relative_error"};
 * perturbation != 0 integrates the sin(2 pi ln x) term alone. */
CM_API cm_status cm_stieltjes_moment(int n, double lambda, int perturbation, char** out_json);
/* degree < 0 picks the shorter sequence length. */
CM_API cm_status cm_tensor_sequence(const char* s_json, const char* t_json, int degree,
                                    char** out_json);
CM_API cm_status cm_dc1_example(char** out_json);

/* Scenarios: "snu2", "null", "ham-c", "no-atom", "dc1", "agnesi", "0notatom".
 * window <= 0 selects the scenario default; t is used by "snu2". */
CM_API cm_status cm_demo(const char* name, double t, int window, char** out_json);
CM_API cm_status cm_demo_names(char** out_json);

#ifdef __cplusplus
}
#endif

#endif /* CMOMENT_H */
