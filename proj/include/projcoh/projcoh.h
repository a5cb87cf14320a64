/*
 * projcoh: exact-arithmetic second cohomology of finite groups, projective
 * monomial representations with prescribed lifting obstruction, central
 * extensions, and operator-algebra realizability verdicts.
 *
 * C API over opaque handles. Every function returns a status code; on
 * failure projcoh_last_error() describes the problem (thread-local).
 * Strings and arrays returned through out-parameters are owned by the
 * caller and released with the matching *_free function.
 */
#ifndef PROJCOH_H
#define PROJCOH_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum projcoh_status {
    PROJCOH_OK = 0,
    PROJCOH_ERR_INVALID = 1,  /* malformed arguments */
    PROJCOH_ERR_DOMAIN = 2,   /* precondition or invariant violated */
    PROJCOH_ERR_RESOURCE = 3, /* configured cap exceeded */
    PROJCOH_ERR_IO = 4,       /* file or JSON trouble */
    PROJCOH_ERR_INTERNAL = 5, /* implementation bug, never a valid outcome */
} projcoh_status;

typedef struct projcoh_group projcoh_group;
typedef struct projcoh_cocycle projcoh_cocycle;   /* 2-cochain */
typedef struct projcoh_cochain1 projcoh_cochain1; /* 1-cochain */
typedef struct projcoh_presentation projcoh_presentation;
typedef struct projcoh_rep projcoh_rep;
typedef struct projcoh_extension projcoh_extension;

const char* projcoh_last_error(void);
void projcoh_string_free(char* s);
void projcoh_int_array_free(int64_t* a);
void projcoh_group_free(projcoh_group* g);
void projcoh_cocycle_free(projcoh_cocycle* w);
void projcoh_cochain1_free(projcoh_cochain1* f);
void projcoh_presentation_free(projcoh_presentation* p);
void projcoh_rep_free(projcoh_rep* r);
void projcoh_extension_free(projcoh_extension* e);

/* ---- groups ------------------------------------------------------------ */

/* spec: "cyclic:6", "dihedral:4", "quaternion8", "klein4", "symmetric:3",
 * "trivial", or "product(a,b)" with nested specs. max_order <= 0 disables
 * the order guard. */
projcoh_status projcoh_group_preset(const char* spec, int64_t max_order,
                                    projcoh_group** out);
projcoh_status projcoh_group_from_json(const char* text, projcoh_group** out);
projcoh_status projcoh_group_to_json(const projcoh_group* g, char** out);
projcoh_status projcoh_group_order(const projcoh_group* g, int64_t* out);
projcoh_status projcoh_group_element_order(const projcoh_group* g, int64_t elem,
                                           int64_t* out);
projcoh_status projcoh_group_center(const projcoh_group* g, int64_t** elems,
                                    size_t* count);

/* ---- cocycles ---------------------------------------------------------- */

projcoh_status projcoh_cocycle_from_json(const char* text, projcoh_cocycle** out);
projcoh_status projcoh_cocycle_to_json(const projcoh_cocycle* w, char** out);
projcoh_status projcoh_is_cocycle(const projcoh_group* g, const projcoh_cocycle* w,
                                  int* out);
/* Coboundary shift making the cocycle vanish on identity pairs; the witness
 * is the constant 1-cochain with value w(0,0). */
projcoh_status projcoh_cocycle_normalize(const projcoh_group* g, const projcoh_cocycle* w,
                                         projcoh_cocycle** out_normalized,
                                         projcoh_cochain1** out_witness);
/* *solvable = 1 and a witness with d1 f = w when w is a coboundary over Z_m. */
projcoh_status projcoh_is_coboundary(const projcoh_group* g, const projcoh_cocycle* w,
                                     int* solvable, projcoh_cochain1** witness);
/* Deterministic seeded cocycle over Z_modulus. */
projcoh_status projcoh_random_cocycle(const projcoh_group* g, int64_t modulus,
                                      uint64_t seed, projcoh_cocycle** out);

projcoh_status projcoh_cochain1_from_json(const char* text, projcoh_cochain1** out);
projcoh_status projcoh_cochain1_to_json(const projcoh_cochain1* f, char** out);

/* ---- cohomology --------------------------------------------------------- */

/* cache_dir NULL or "" disables the content-addressed cache. */
projcoh_status projcoh_h2_zm(const projcoh_group* g, int64_t m, const char* cache_dir,
                             projcoh_presentation** out);
projcoh_status projcoh_schur_multiplier(const projcoh_group* g, const char* cache_dir,
                                        projcoh_presentation** out);
projcoh_status projcoh_presentation_to_json(const projcoh_presentation* p, char** out);
projcoh_status projcoh_presentation_factors(const projcoh_presentation* p,
                                            int64_t** factors, size_t* count);
projcoh_status projcoh_class_coords(const projcoh_group* g, const projcoh_cocycle* w,
                                    const projcoh_presentation* p, int64_t** coords,
                                    size_t* count);
projcoh_status projcoh_class_order(const projcoh_group* g, const projcoh_cocycle* w,
                                   const projcoh_presentation* p, int64_t* out);
projcoh_status projcoh_representative_of_order(const projcoh_group* g,
                                               const projcoh_presentation* p,
                                               const int64_t* coords, size_t count,
                                               projcoh_cocycle** out);
/* *solvable = 1 and coordinates y with n*y = x when the division has a
 * solution in the presentation. */
projcoh_status projcoh_solve_division(const projcoh_presentation* p,
                                      const int64_t* coords, size_t count, int64_t n,
                                      int* solvable, int64_t** y, size_t* ycount);

/* ---- representations ---------------------------------------------------- */

projcoh_status projcoh_rep_regular(const projcoh_group* g, const projcoh_cocycle* w,
                                   projcoh_rep** out);
/* Eigenspace construction of dimension n^(2|G|-1); diagnostics_json (optional)
 * reports the eigenspace sizes and the Ad(U) commutation check. */
projcoh_status projcoh_rep_lemma(const projcoh_group* g, const projcoh_cocycle* lam,
                                 int64_t dim_cap, projcoh_rep** out,
                                 char** diagnostics_json);
projcoh_status projcoh_rep_to_json(const projcoh_rep* r, char** out);
projcoh_status projcoh_rep_from_json(const char* text, projcoh_rep** out);
projcoh_status projcoh_rep_dimension(const projcoh_rep* r, int64_t* out);
/* {"ok","dimension","pairs_checked","first_failure"} */
projcoh_status projcoh_rep_verify(const projcoh_rep* r, char** report_json);
projcoh_status projcoh_rep_extract_cocycle(const projcoh_rep* r, projcoh_cocycle** out);
projcoh_status projcoh_rep_lift(const projcoh_rep* r, const projcoh_cochain1* f,
                                projcoh_rep** out);
/* Dense text export, dimension <= 64. */
projcoh_status projcoh_rep_export_dense(const projcoh_rep* r, char** out_text);

/* ---- central extensions -------------------------------------------------- */

projcoh_status projcoh_extension_build(const projcoh_group* g, const projcoh_cocycle* w,
                                       projcoh_extension** out);
projcoh_status projcoh_extension_to_json(const projcoh_extension* e, char** out);
projcoh_status projcoh_extension_from_json(const char* text, projcoh_extension** out);
/* {"all_ok","checks":[{"name","ok","witness"},...]} */
projcoh_status projcoh_extension_verify(const projcoh_extension* e, char** report_json);

/* ---- realizability ------------------------------------------------------- */

/* algebras_csv example: "jiangsu,uhf:2,uhf:3,O3,O4,Oinf,O2". Output is a
 * JSON array of {"algebra","realizable","reason"} verdicts. */
projcoh_status projcoh_realize(const projcoh_group* g, const projcoh_cocycle* w,
                               const char* algebras_csv, const char* cache_dir,
                               char** verdicts_json);
/* Z^2 special case: theta = num/den in lowest terms against M_{n^infty}. */
projcoh_status projcoh_uhf_z2_rotation(int64_t num, int64_t den, int64_t n,
                                       char** verdict_json);

#ifdef __cplusplus
}
#endif

#endif /* PROJCOH_H */
