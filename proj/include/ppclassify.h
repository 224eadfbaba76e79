/* ppclassify: supervised classification of spatial point patterns.
 *
 * C interface to the shared library. All functions return a ppc_status;
 * on failure, ppc_last_error() describes the problem for the calling thread.
 * Objects are handled through opaque pointers and freed with their matching
 * *_free function.
 */
#ifndef PPCLASSIFY_H
#define PPCLASSIFY_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ppc_status {
  PPC_OK = 0,
  PPC_ERR_CONFIG = 2, /* config or parse error */
  PPC_ERR_NUMERIC = 3 /* numeric or invariant failure */
} ppc_status;

/* Message for the last failing call on this thread; empty string if none. */
const char* ppc_last_error(void);

/* ---- point patterns ------------------------------------------------- */

typedef struct ppc_pattern ppc_pattern;

/* coords is row-major n_points x dim; the pattern must fit in the box. */
ppc_status ppc_pattern_create(const double* lower, const double* upper, int dim,
                              const double* coords, int n_points, ppc_pattern** out);
void ppc_pattern_free(ppc_pattern* p);
int ppc_pattern_size(const ppc_pattern* p);
int ppc_pattern_dim(const ppc_pattern* p);
/* buf must hold size*dim doubles. */
ppc_status ppc_pattern_coords(const ppc_pattern* p, double* buf);

/* ---- distances ------------------------------------------------------ */

/* d0_kind: -1 plain Hausdorff, 0 cardinality, 1 Hellinger, 2 Kullback-Leibler.
 * Kinds >= 0 give d_H/diam(S) + d0. */
ppc_status ppc_pattern_distance(const ppc_pattern* x, const ppc_pattern* y, int d0_kind,
                                double* out);

/* ---- samplers ------------------------------------------------------- */

/* Scenario names: smooth0, smooth1, wiggly0, wiggly1, shifted0, shifted1. */
ppc_status ppc_sample_scenario(const char* scenario, const double* params, int n_params,
                               uint64_t seed, ppc_pattern** out);
ppc_status ppc_sample_strauss(const double* lower, const double* upper, int dim, double beta,
                              double gamma, double r, int mcmc_steps, uint64_t seed,
                              ppc_pattern** out);

/* ---- file-based pipelines (used by the CLI) ------------------------- */

ppc_status ppc_simulate(const char* scenario, const double* params, int n_params, int count,
                        uint64_t seed, const char* out_csv);
ppc_status ppc_estimate(const char* in_csv, double sigma, int grid_res, const char* out_csv);
ppc_status ppc_bench(const char* config_json);
ppc_status ppc_classify(const char* train_csv, const char* test_csv, const char* config_json,
                        const char* out_json);

#ifdef __cplusplus
}
#endif

#endif /* PPCLASSIFY_H */
