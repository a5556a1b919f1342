/* C API for the golden-games library.
 *
 * All functions return gg_status unless the result cannot fail. On any
 * failure gg_last_error() returns a thread-local human-readable message
 * (parse errors include the byte offset of the first offending byte).
 * Objects returned through gg_game** are owned by the caller and released
 * with gg_game_free(); strings from gg_verify() with gg_string_free().
 */
#ifndef GOLDGAMES_H
#define GOLDGAMES_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#ifndef GG_API
#define GG_API __attribute__((visibility("default")))
#endif

typedef enum gg_status {
  GG_OK = 0,
  GG_ERR_INVALID_ARGUMENT = 1,
  GG_ERR_IO = 2,
  GG_ERR_PARSE = 3,
  GG_ERR_TOO_LARGE = 4
} gg_status;

#define GG_MAX_CAP 16
#define GG_MAX_MATERIALIZED_DEPTH 30

typedef struct gg_game gg_game; /* opaque */

GG_API const char* gg_last_error(void);
GG_API double gg_phi(void);

/* ---- games ---------------------------------------------------------- */

GG_API gg_status gg_game_sample(uint32_t depth, double p, uint64_t seed,
                                uint64_t sample_index, gg_game** out);
/* bits: one byte per leaf, 0 or 1, length 2^depth */
GG_API gg_status gg_game_from_bits(uint32_t depth, const uint8_t* bits,
                                   gg_game** out);
GG_API gg_status gg_game_read_file(const char* path, gg_game** out);
GG_API gg_status gg_game_write_file(const gg_game* game, const char* path,
                                    int binary);
GG_API void gg_game_free(gg_game* game);

GG_API uint32_t gg_game_depth(const gg_game* game);
GG_API uint64_t gg_game_leaf_count(const gg_game* game);
GG_API int gg_game_leaf(const gg_game* game, uint64_t leaf_index);

GG_API int gg_game_value(const gg_game* game);
GG_API gg_status gg_game_cost_pair(const gg_game* game, uint64_t* cost_to_0,
                                   uint64_t* cost_to_1);
GG_API uint64_t gg_game_fragility(const gg_game* game);

/* witness: caller provides a buffer of at least gg_game_fragility() entries;
 * *out_len receives the witness size, *out_value the game value. */
GG_API gg_status gg_game_witness(const gg_game* game, int* out_value,
                                 uint64_t* witness_buf, uint64_t buf_len,
                                 uint64_t* out_len);

/* Exhaustive oracle. *out_over = 1 when no flip set of size <= cap works. */
GG_API gg_status gg_game_brute_force_fragility(const gg_game* game,
                                               uint64_t cap, uint64_t* out,
                                               int* out_over);

GG_API int gg_leaf_payoff(uint32_t depth, double p, uint64_t seed,
                          uint64_t sample_index, uint64_t leaf_index);
GG_API int gg_value_streamed(uint32_t depth, double p, uint64_t seed,
                             uint64_t sample_index);

/* ---- exact distribution --------------------------------------------- */

typedef struct gg_exact_row {
  uint32_t n;
  double prob_v1;
  double F[GG_MAX_CAP];     /* F[d-1] = F_n(d) */
  double alpha[GG_MAX_CAP]; /* NaN when Pr[V=1] = 0 */
  double beta[GG_MAX_CAP];  /* NaN when Pr[V=0] = 0 */
} gg_exact_row;

/* rows must hold depth+1 entries. */
GG_API gg_status gg_exact_table(uint32_t depth, double p, uint32_t cap,
                                gg_exact_row* rows);

/* probs must hold depth+1 entries; probs[n] = Pr[V_n = 1]. */
GG_API gg_status gg_value_prob_iterate(double p, uint32_t depth, double* probs);

/* ---- asymptotic theory ----------------------------------------------- */

typedef struct gg_theory_row {
  uint32_t d;
  double xi;
  double xi_sq;
  double H;
  double F;
  double one_minus_F;
} gg_theory_row;

/* rows must hold dmax entries. */
GG_API gg_status gg_theory_table(uint32_t dmax, gg_theory_row* rows);

/* alpha/beta must hold (nmax+1)*dmax entries, row-major in n then d. */
GG_API gg_status gg_finite_alpha_beta(uint32_t dmax, uint32_t nmax,
                                      double* alpha, double* beta);

/* ---- Monte Carlo ------------------------------------------------------ */

typedef struct gg_mc_request {
  uint32_t depth;
  double p;
  uint32_t dmax;
  uint64_t samples;
  uint64_t seed;
  uint32_t workers;
} gg_mc_request;

typedef struct gg_mc_interval {
  double est;
  double lo;
  double hi;
} gg_mc_interval;

typedef struct gg_mc_result {
  uint64_t samples;
  uint32_t dmax;
  /* counts[v][c-1], c = min(fragility, dmax+1) */
  uint64_t counts[2][GG_MAX_CAP + 1];
  gg_mc_interval prob_v1;
  gg_mc_interval F[GG_MAX_CAP];
} gg_mc_result;

GG_API gg_status gg_mc_estimate(const gg_mc_request* req, gg_mc_result* out);

/* ---- verification ----------------------------------------------------- */

/* *out_report receives a malloc'd report string (free with gg_string_free);
 * *out_passed is 1 when every suite passed. */
GG_API gg_status gg_verify(uint32_t max_depth, uint64_t budget,
                           char** out_report, int* out_passed);
GG_API void gg_string_free(char* s);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* GOLDGAMES_H */
