#ifndef QDIGITS_QDIGITS_H
#define QDIGITS_QDIGITS_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define QD_API __declspec(dllexport)
#else
#define QD_API __attribute__((visibility("default")))
#endif

typedef enum qd_status {
    QD_OK = 0,
    QD_INVALID_ARGUMENT = 1,
    QD_DOMAIN = 2,
    QD_UNSUPPORTED = 3,
    QD_DIMENSION = 4,
    QD_INTERNAL = 5
} qd_status;

typedef enum qd_boundary { QD_PERIODIC = 0, QD_ANTIPERIODIC = 1 } qd_boundary;

typedef enum qd_representation {
    QD_REPRESENTATION_DEFAULT = 0,
    QD_REPRESENTATION_NONNEGATIVE = 1,
    QD_REPRESENTATION_SIGNED = 2
} qd_representation;

typedef struct qd_lattice qd_lattice;
typedef struct qd_matrix qd_matrix;

/* Antiperiodic lattices carry the half-step coordinate offset. */
QD_API qd_status qd_lattice_create(int base, int digits, int n_minus, qd_boundary boundary, qd_lattice **out);
QD_API void qd_lattice_destroy(qd_lattice *lattice);
QD_API qd_status qd_lattice_size(const qd_lattice *lattice, long long *size);

typedef struct qd_operator_request {
    /* identity, x, p, x-digit, p-digit, shift, phase, projector */
    const char *op;
    /* symmetric or nonsymmetric */
    const char *flavor;
    int index;
    /* Rational text such as "1/3" for shift, phase and projector; may be NULL. */
    const char *amount;
    qd_representation representation;
    int renormalized;
} qd_operator_request;

QD_API qd_status qd_build_operator(const qd_lattice *lattice, const qd_operator_request *request, qd_matrix **out);
QD_API void qd_matrix_destroy(qd_matrix *matrix);
QD_API qd_status qd_matrix_dim(const qd_matrix *matrix, long long *rows, long long *cols);
QD_API qd_status qd_matrix_entry(const qd_matrix *matrix, long long row, long long col, double *re, double *im);
/* MatrixDocument JSON; release with qd_string_free. */
QD_API qd_status qd_matrix_to_json(const qd_matrix *matrix, char **json);

/* suite: examples, oracle, commutators, renorm, integral or all. */
QD_API qd_status qd_verify(const char *suite, int max_n, double tolerance, char **json, int *passed);

typedef struct qd_sweep_params {
    int base;
    const char *flavor;
    long long d_max;
    double x;
} qd_sweep_params;

/* sweep: line-convergence, integral-convergence or ln3-series. params may be NULL. */
QD_API qd_status qd_sweep(const char *sweep, const qd_sweep_params *params, char **csv);

QD_API void qd_string_free(char *text);

/* Message of the last failing call on this thread, or "" after success. */
QD_API const char *qd_last_error(void);

#ifdef __cplusplus
}
#endif

#endif
