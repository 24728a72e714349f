#ifndef MONOGENICA_H
#define MONOGENICA_H

/* C interface to the monogenica library.
 *
 * Quaternions are passed as double[4] in the order (a0, a1, a2, a3) for
 * a0 + a1 e1 + a2 e2 + a3 e3, points as double[3] = (x0, x1, x2).
 * Every fallible call returns an mg_status; on failure the message is
 * available through mg_last_error() on the calling thread. Handles are
 * opaque, immutable after construction and safe to share between threads.
 * Basis indices use the signed degree k (k >= 0 inner, k <= -2 outer). */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define MG_API __declspec(dllexport)
#else
#define MG_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum mg_status {
  MG_OK = 0,
  MG_ERR_INDEX = 1,
  MG_ERR_DOMAIN = 2,
  MG_ERR_POLE = 3,
  MG_ERR_UNSUPPORTED = 4,
  MG_ERR_NO_PRIMITIVE = 5,
  MG_ERR_PARSE = 6,
  MG_ERR_INVALID_ARGUMENT = 7,
  MG_ERR_INTERNAL = 8
} mg_status;

typedef enum mg_family { MG_FAMILY_PHI = 0, MG_FAMILY_APPELL = 1 } mg_family;

typedef enum mg_domain_kind {
  MG_DOMAIN_BALL = 0,
  MG_DOMAIN_SPHERE = 1,
  MG_DOMAIN_SHELL = 2,
  MG_DOMAIN_EXTERIOR = 3
} mg_domain_kind;

typedef enum mg_series_kind {
  MG_SERIES_FOURIER = 0,
  MG_SERIES_TAYLOR = 1,
  MG_SERIES_LAURENT = 2
} mg_series_kind;

typedef enum mg_laurent_variant { MG_LAURENT_APPELL = 0, MG_LAURENT_PHI = 1 } mg_laurent_variant;

typedef struct mg_orders {
  int n_r;
  int n_theta;
  int n_phi;
} mg_orders;

typedef struct mg_action {
  int has_target; /* 0 when the operator annihilates the element */
  int target_k;
  int target_l;
  double factor;
} mg_action;

typedef struct mg_rule mg_rule;
typedef struct mg_function mg_function;
typedef struct mg_series mg_series;

/* Must be thread safe: quadrature evaluates it concurrently. Return 0 on success. */
typedef int (*mg_callback)(const double x[3], double out[4], void* user_data);

MG_API const char* mg_version(void);
MG_API const char* mg_status_name(mg_status status);
MG_API const char* mg_last_error(void);
/* Byte offset of the last parse error, -1 when the last error was not a parse error. */
MG_API long mg_last_error_position(void);
MG_API int mg_max_threads(void);
MG_API void mg_string_free(char* text);

/* Basis */
MG_API mg_status mg_index_count(int k_min, int k_max, size_t* count);
MG_API mg_status mg_indices(int k_min, int k_max, int* ks, int* ls, size_t capacity);
MG_API mg_status mg_basis_eval(mg_family family, int k, int l, const double x[3], double out[4]);
MG_API mg_status mg_family_convert(int k, int l, mg_family from, mg_family to, double* factor);
MG_API mg_status mg_norm_formula(int n, int m, double* norm);
MG_API mg_status mg_spherical_monogenic(int y_part, int n, int m, double theta, double phi, double out[4]);

/* Operators */
MG_API mg_status mg_derivative_action(mg_family family, int k, int l, mg_action* out);
MG_API mg_status mg_primitive_action(mg_family family, int k, int l, mg_action* out);
MG_API mg_status mg_kernel_depth(int k, int l, int* depth);
MG_API mg_status mg_taylor_functional(int fk, int fl, int ek, int el, double* value);
MG_API mg_status mg_fd_hyper_derivative(const mg_function* f, const double x[3], double h, double out[4]);
MG_API mg_status mg_fd_dbar(const mg_function* f, const double x[3], double h, double out[4]);

/* Functions */
MG_API mg_status mg_function_parse(const char* text, mg_function** out);
MG_API mg_status mg_function_basis(mg_family family, int k, int l, mg_function** out);
MG_API mg_status mg_function_from_callback(mg_callback callback, void* user_data, mg_function** out);
MG_API mg_status mg_function_from_series(const mg_series* series, mg_function** out);
MG_API void mg_function_free(mg_function* f);
MG_API mg_status mg_function_eval(const mg_function* f, const double x[3], double out[4]);
/* Degree of a polynomial expression, -1 otherwise. */
MG_API mg_status mg_function_degree(const mg_function* f, int* degree);

/* Quadrature */
MG_API mg_orders mg_default_orders(int n_max);
MG_API mg_status mg_rule_build(mg_domain_kind kind, double r_in, double r_out, mg_orders orders, mg_rule** out);
MG_API void mg_rule_free(mg_rule* rule);
MG_API mg_status mg_rule_size(const mg_rule* rule, size_t* size);
MG_API mg_status mg_integrate(const mg_rule* rule, const mg_function* f, double out[4]);
MG_API mg_status mg_inner_product(const mg_rule* rule, const mg_function* f, const mg_function* g, double out[4]);
/* out receives count * count quaternions, row-major. */
MG_API mg_status mg_gram(const mg_rule* rule, mg_family family, const int* ks, const int* ls, size_t count,
                         double* out);
MG_API mg_status mg_cauchy_integral(const mg_rule* sphere, const mg_function* f, const double x[3], double out[4]);

/* Series. A NULL orders pointer selects the defaults for the degree range. */
MG_API mg_status mg_fourier_expand(const mg_function* f, int n_max, const mg_rule* ball, mg_series** out);
MG_API mg_status mg_taylor_coeffs(const mg_function* f, int n_max, double rho, const mg_orders* orders,
                                  mg_series** out);
MG_API mg_status mg_laurent_expand(const mg_function* f, double rho, int k_min, int k_max, mg_laurent_variant variant,
                                   const mg_orders* orders, mg_series** out);
MG_API void mg_series_free(mg_series* series);
MG_API mg_status mg_series_info(const mg_series* series, mg_series_kind* kind, mg_family* family, int* k_min,
                                int* k_max, size_t* size);
/* Entries ordered by (k, l) ascending. */
MG_API mg_status mg_series_entry(const mg_series* series, size_t i, int* k, int* l, double c[4]);
MG_API mg_status mg_series_eval(const mg_series* series, const double x[3], double out[4]);
MG_API mg_status mg_series_derive(const mg_series* series, mg_series** out);
MG_API mg_status mg_series_primitive(const mg_series* series, mg_series** out);
MG_API mg_status mg_series_convert(const mg_series* series, mg_family to, mg_series** out);
MG_API mg_status mg_series_fourier_from_taylor(const mg_series* taylor, mg_series** out);
MG_API mg_status mg_series_taylor_from_fourier(const mg_series* fourier, mg_series** out);
MG_API mg_status mg_series_prune(const mg_series* series, double threshold, mg_series** out);
MG_API mg_status mg_series_truncate(const mg_series* series, int k_min, int k_max, mg_series** out);
MG_API mg_status mg_series_l2_residual(const mg_series* series, const mg_function* f, const mg_rule* rule,
                                       double* residual);
MG_API mg_status mg_series_parseval(const mg_series* series, const mg_function* f, const mg_rule* ball, double* lhs,
                                    double* rhs);
MG_API mg_status mg_series_to_json(const mg_series* series, char** json);
MG_API mg_status mg_series_from_json(const char* json, mg_series** out);

/* Invariant suite; *json receives the report, *all_passed is 0 or 1. */
MG_API mg_status mg_verify_run(int n_max, uint64_t seed, int deep, char** json, int* all_passed);

#ifdef __cplusplus
}
#endif

#endif
