/* C API for the Solow-Polasky diversity chain solver.
 *
 * All functions returning spdiv_status set a thread-local error message,
 * retrievable via spdiv_last_error(), on any non-OK result. Objects returned
 * through out-parameters are owned by the caller and must be released with
 * the matching _destroy function. Pointers returned by getters stay valid
 * until their owning object is destroyed.
 */
#ifndef SPDIV_H
#define SPDIV_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

#ifndef SPDIV_API
#define SPDIV_API __attribute__((visibility("default")))
#endif

typedef enum spdiv_status {
  SPDIV_OK = 0,
  SPDIV_ERR_BAD_ARGUMENT = 1,
  SPDIV_ERR_DIMENSION_MISMATCH = 2,
  SPDIV_ERR_NON_FINITE = 3,
  SPDIV_ERR_DUPLICATE_POINT = 4,
  SPDIV_ERR_NOT_A_STAIRCASE = 5,
  SPDIV_ERR_NOT_MONOTONE_FRONT = 6,
  SPDIV_ERR_BAD_CARDINALITY = 7,
  SPDIV_ERR_SINGULAR_MATRIX = 8,
  SPDIV_ERR_TOO_LARGE_FOR_BRUTE_FORCE = 9,
  SPDIV_ERR_UNKNOWN_FIXTURE = 10,
  SPDIV_ERR_INTERNAL = 11
} spdiv_status;

typedef enum spdiv_objective {
  SPDIV_OBJECTIVE_SP = 0,  /* Solow-Polasky diversity, max-plus DP */
  SPDIV_OBJECTIVE_MPD = 1  /* minimum pairwise distance, bottleneck DP */
} spdiv_objective;

typedef struct spdiv_points spdiv_points;       /* ordered d-dim point set */
typedef struct spdiv_reduction spdiv_reduction; /* staircase line reduction */
typedef struct spdiv_selection spdiv_selection; /* solved subset */

SPDIV_API const char* spdiv_version(void);
SPDIV_API const char* spdiv_status_name(spdiv_status status);
/* Detail message of the most recent failing call on this thread ("" if none). */
SPDIV_API const char* spdiv_last_error(void);

/* ---- point sets ------------------------------------------------------- */

/* coords is row-major, n points of dimension d. */
SPDIV_API spdiv_status spdiv_points_create(const double* coords, size_t n, size_t d,
                                           spdiv_points** out);
SPDIV_API void spdiv_points_destroy(spdiv_points* points);
SPDIV_API size_t spdiv_points_count(const spdiv_points* points);
SPDIV_API size_t spdiv_points_dim(const spdiv_points* points);

/* ---- staircase detection and reduction -------------------------------- */

SPDIV_API spdiv_status spdiv_detect_staircase(const spdiv_points* points,
                                              spdiv_reduction** out);
SPDIV_API void spdiv_reduction_destroy(spdiv_reduction* red);
SPDIV_API size_t spdiv_reduction_size(const spdiv_reduction* red);
SPDIV_API size_t spdiv_reduction_dim(const spdiv_reduction* red);
/* order[i] = 0-based original index of the i-th chain point. */
SPDIV_API const size_t* spdiv_reduction_order(const spdiv_reduction* red);
/* signs, entries +1 / -1, length dim. */
SPDIV_API const int* spdiv_reduction_sigma(const spdiv_reduction* red);
/* strictly increasing induced line coordinates, length size. */
SPDIV_API const double* spdiv_reduction_line_coords(const spdiv_reduction* red);
/* Full O(n^2) pairwise recheck; 1 = pass, 0 = fail. */
SPDIV_API int spdiv_reduction_verify(const spdiv_points* points, const spdiv_reduction* red);
/* Consecutive-gap additivity of the given order; 1 = holds, 0 = not, <0 = error. */
SPDIV_API int spdiv_additivity_check(const spdiv_points* points);

/* ---- subset selection on a line instance ------------------------------ */

/* t must be strictly increasing, q > 0 (q ignored for MPD). */
SPDIV_API spdiv_status spdiv_select(const double* t, size_t n, spdiv_objective objective,
                                    size_t k, double q, spdiv_selection** out);
/* Exhaustive oracle; SP scored through the dense matrix solve. */
SPDIV_API spdiv_status spdiv_select_brute_force(const double* t, size_t n,
                                                spdiv_objective objective, size_t k, double q,
                                                size_t max_n, spdiv_selection** out);
SPDIV_API void spdiv_selection_destroy(spdiv_selection* sel);
SPDIV_API size_t spdiv_selection_size(const spdiv_selection* sel);
/* 0-based strictly increasing indices into the line instance, length size. */
SPDIV_API const size_t* spdiv_selection_indices(const spdiv_selection* sel);
/* Objective value; +infinity for MPD with k = 1. */
SPDIV_API double spdiv_selection_value(const spdiv_selection* sel);
/* phi terms (SP) or raw gaps (MPD), length size - 1. */
SPDIV_API const double* spdiv_selection_gap_contributions(const spdiv_selection* sel);

/* ---- magnitude primitives --------------------------------------------- */

SPDIV_API spdiv_status spdiv_sp_gap_formula(const double* gaps, size_t ngaps, double q,
                                            double* out);
/* Dense matrix-solve oracle on strictly increasing t; weights may be NULL,
 * otherwise it receives n solved weights. */
SPDIV_API spdiv_status spdiv_sp_exact(const double* t, size_t n, double q, double* value,
                                      double* weights);
SPDIV_API spdiv_status spdiv_chain_weights_closed_form(const double* gaps, size_t ngaps,
                                                       double q, double* weights);
SPDIV_API spdiv_status spdiv_sp_of_subset(const double* t, size_t n, double q,
                                          const size_t* indices, size_t k, double* out);
SPDIV_API spdiv_status spdiv_edge_weight(double ti, double tj, double q, double* out);

/* ---- fixtures --------------------------------------------------------- */

/* Embedded CSV text for "pareto5", "parabola20", or "staircase3d";
 * NULL (with spdiv_last_error set) for unknown names. */
SPDIV_API const char* spdiv_fixture_csv(const char* name);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* SPDIV_H */
