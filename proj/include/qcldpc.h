/* C API for the qcldpc library: construction, girth verification, minimal
 * lifting degree search, alist export, and BER simulation of quasi-cyclic
 * LDPC codes lifted from all-one protographs.
 *
 * All functions returning int yield QCLDPC_OK (0) on success or one of the
 * error codes below; qcldpc_strerror maps codes to text. Objects returned
 * through out-parameters are owned by the caller and released with the
 * matching *_free function.
 */
#ifndef QCLDPC_H
#define QCLDPC_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#define QCLDPC_OK 0
#define QCLDPC_EINVAL 1     /* bad argument or precondition */
#define QCLDPC_EIO 2        /* file system failure */
#define QCLDPC_EPARSE 3     /* malformed input file */
#define QCLDPC_ECONSTRUCT 4 /* construction search failed */
#define QCLDPC_EDISAGREE 5  /* girth methods disagree (method "all") */
#define QCLDPC_EINTERNAL 6

/* Girth value reported when every tested condition passed (girth > 12). */
#define QCLDPC_GIRTH_MAX_TESTED 12

typedef struct qcldpc_matrix qcldpc_matrix;
typedef struct qcldpc_sim qcldpc_sim;

const char *qcldpc_strerror(int code);
void qcldpc_string_free(char *s);

/* --- exponent matrices ------------------------------------------------- */

/* strategy: "smallest" | "maxplus" | "random" (random uses seed and bound).
 * girth: 6, 8, 10 or 12. The result is a free (unreduced) matrix. */
int qcldpc_construct(int girth, int nv, const char *strategy, uint64_t seed, int64_t bound,
                     qcldpc_matrix **out);

/* n = 0 denotes a free matrix; finite n requires exponents in [0, n). */
int qcldpc_matrix_from_exponents(int nc, int nv, const int64_t *row_major, int64_t n,
                                 qcldpc_matrix **out);
int qcldpc_matrix_read(const char *path, qcldpc_matrix **out);
int qcldpc_matrix_write(const qcldpc_matrix *m, const char *path);
int qcldpc_matrix_nc(const qcldpc_matrix *m);
int qcldpc_matrix_nv(const qcldpc_matrix *m);
int64_t qcldpc_matrix_lifting(const qcldpc_matrix *m); /* 0 = free */
int qcldpc_matrix_exponent(const qcldpc_matrix *m, int r, int c, int64_t *out);
int qcldpc_matrix_reduce_mod(const qcldpc_matrix *m, int64_t n, qcldpc_matrix **out);
void qcldpc_matrix_free(qcldpc_matrix *m);

/* --- girth ------------------------------------------------------------- */

/* method: "sets" | "ch" | "bn" | "oracle" | "all". n = 0 uses the matrix's
 * stored lifting degree; a free matrix with n = 0 is checked over the
 * integers (method "sets" only). On success *girth is 4..12 and *exceeds is
 * 1 when the true girth is larger than the tested maximum. Witness (may be
 * NULL) receives a description of the violated condition when girth < 12;
 * free it with qcldpc_string_free. With "all", a disagreement returns
 * QCLDPC_EDISAGREE and a summary in *witness. */
int qcldpc_girth(const qcldpc_matrix *m, int64_t n, const char *method, int *girth, int *exceeds,
                 char **witness);

/* Smallest N whose lift keeps the target girth. The matrix must satisfy the
 * target's conditions over the integers. */
int qcldpc_min_lift(const qcldpc_matrix *m, int girth, int64_t *n_out);

/* --- export ------------------------------------------------------------ */

int qcldpc_export_alist(const qcldpc_matrix *m, int64_t n, const char *path);

/* --- simulation --------------------------------------------------------- */

typedef struct {
    const double *ebno_db;
    size_t ebno_count;
    int max_iterations;    /* default 100 */
    uint64_t seed;         /* default 1 */
    int64_t min_bit_errors; /* stop rule per point, default 100 */
    int64_t max_frames;    /* per point, default 1000000 */
    int rate_measured;     /* 1: Eb/N0 uses measured rate (default); 0: design rate */
    double llr_clamp;      /* message magnitude cap, default 30 */
    int workers;           /* 0 = auto */
    int uncoded;           /* hard channel decisions only, R = 1 */
    int noiseless;         /* zero-noise override */
} qcldpc_sim_config;

void qcldpc_sim_config_init(qcldpc_sim_config *cfg);

int qcldpc_simulate(const qcldpc_matrix *m, int64_t n, const qcldpc_sim_config *cfg,
                    qcldpc_sim **out);
size_t qcldpc_sim_points(const qcldpc_sim *s);
int qcldpc_sim_point(const qcldpc_sim *s, size_t idx, double *ebno_db, int64_t *frames,
                     int64_t *bit_errors, int64_t *frame_errors, double *ber, double *fer,
                     double *avg_iters);
int qcldpc_sim_meta(const qcldpc_sim *s, int64_t *block_length, int64_t *info_bits,
                    double *rate_used, int *girth, int *girth_exceeds);
int qcldpc_sim_csv(const qcldpc_sim *s, char **csv);
void qcldpc_sim_free(qcldpc_sim *s);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* QCLDPC_H */
