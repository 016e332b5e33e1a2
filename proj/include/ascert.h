/*
 * ascert - exact construction and certification of small association
 * schemes (doubly regular tournaments, their extended double covers,
 * doublings, and Taylor-type covers), with eigenmatrices and skew
 * Hadamard matrices over exact arithmetic.
 *
 * All functions that return an ascert_status set a thread-local error
 * message retrievable with ascert_last_error() on failure. Schemes are
 * opaque handles; every handle returned by this API has already been
 * certified (every product A_i A_j verified to expand with constant
 * integer coefficients).
 */
#ifndef ASCERT_H
#define ASCERT_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ascert_status {
    ASCERT_OK = 0,
    ASCERT_INVALID_ARGUMENT = 1,   /* null pointer, bad index, bad parameter */
    ASCERT_PARSE_ERROR = 2,        /* malformed input text */
    ASCERT_CERTIFICATION_ERROR = 3,/* not an association scheme / identity fails */
    ASCERT_PRECONDITION_ERROR = 4, /* scheme of the wrong kind for the operation */
    ASCERT_UNSUPPORTED = 5,        /* exact result not representable (class > 3, ...) */
    ASCERT_NO_MEMORY = 6
} ascert_status;

/* Static name of a status code, e.g. "certification-error". */
const char *ascert_status_str(ascert_status status);

/* Message of the most recent failure on this thread; empty if none. */
const char *ascert_last_error(void);

typedef struct ascert_scheme ascert_scheme;

/* -- generators ---------------------------------------------------------- */

/* Quadratic-residue tournament scheme on a prime m = 3 (mod 4). */
ascert_status ascert_paley_tournament(int64_t m, ascert_scheme **out);

/* Quadratic-residue graph scheme on a prime q = 1 (mod 4). */
ascert_status ascert_paley_graph(int64_t q, ascert_scheme **out);

/* -- text I/O ------------------------------------------------------------ */

/*
 * Scheme text format: header line "n d", then n rows of n space-separated
 * relation indices; full-line '#' comments allowed. Parsing certifies.
 */
ascert_status ascert_scheme_from_text(const char *text, ascert_scheme **out);

/* Canonical text of the scheme; free with ascert_text_free. */
ascert_status ascert_scheme_to_text(const ascert_scheme *s, char **out_text);

void ascert_scheme_free(ascert_scheme *s);
void ascert_text_free(char *text);

/* -- inspection ---------------------------------------------------------- */

int64_t ascert_scheme_order(const ascert_scheme *s);        /* point count n */
int64_t ascert_scheme_num_classes(const ascert_scheme *s);  /* class d */
int ascert_scheme_is_symmetric(const ascert_scheme *s);
int ascert_scheme_is_commutative(const ascert_scheme *s);

/* Valency k_i; -1 if i is out of range. */
int64_t ascert_scheme_valency(const ascert_scheme *s, int64_t i);

/* Structure constant p_{i,j}^l; -1 if an index is out of range. */
int64_t ascert_scheme_intersection_number(const ascert_scheme *s, int64_t i, int64_t j,
                                          int64_t l);

/* -- constructions ------------------------------------------------------- */

/* Class-3 scheme on 2(n+1) points from a non-symmetric class-2 scheme. */
ascert_status ascert_extended_double_cover(const ascert_scheme *s, ascert_scheme **out);

/* Non-symmetric class-2 scheme on 2n+1 points from one on n points. */
ascert_status ascert_doubling(const ascert_scheme *s, ascert_scheme **out);

/* Symmetric class-3 scheme on 2(n+1) points from a symmetric class-2
 * scheme with k = 2*mu. Relation 1 is a Taylor graph. */
ascert_status ascert_taylor_extension(const ascert_scheme *s, ascert_scheme **out);

/* Swaps the labels of every transpose pair of relations. */
ascert_status ascert_reverse(const ascert_scheme *s, ascert_scheme **out);

/* -- reports ------------------------------------------------------------- */

/*
 * Certification report: order, class, symmetry type, valencies, transpose
 * pairing and the full intersection-number tensor. Text, or JSON when
 * as_json is nonzero. Free with ascert_text_free.
 */
ascert_status ascert_verify_report(const ascert_scheme *s, int as_json, char **out_text);

/*
 * Exact eigenmatrices: first and second eigenmatrix, valencies and
 * multiplicities of a commutative scheme of class <= 3, recovered from the
 * intersection matrices. Text, or the JSON eigen-report when as_json is
 * nonzero (each entry encoded as a_num/a_den + (b_num/b_den) * sqrt(disc)).
 */
ascert_status ascert_eigen_report(const ascert_scheme *s, int as_json, char **out_text);

/*
 * Bordered skew Hadamard matrix of order n+1 from a non-symmetric class-2
 * scheme on n points, as sign-matrix text (rows of "+"/"-").
 */
ascert_status ascert_hadamard_text(const ascert_scheme *s, char **out_text);

/*
 * Builds the quadratic-residue tournament on m, doubles it, and checks that
 * the extended double cover of the doubling equals the direct block-form
 * construction: cell-for-cell after the block alignment permutation, and
 * with identical intersection tensors. *out_pass is 1 on full agreement.
 */
ascert_status ascert_check_theorem(int64_t m, int as_json, int *out_pass, char **out_text);

#ifdef __cplusplus
}
#endif

#endif /* ASCERT_H */
