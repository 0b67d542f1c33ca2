/*
 * (C) Copyright 2026 grouptop developers
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#ifndef GROUPTOP_GROUPTOP_H
#define GROUPTOP_GROUPTOP_H

/*
 * C interface to the group and complex workbench.  Inputs are plain
 * strings (presentation text, complex JSON); results come back as one
 * heap-allocated report string per call, rendered either as stable
 * human-readable text or as a JSON object, caller's choice.  Every
 * function returns a status code; on failure *out is untouched and
 * grouptop_last_error() describes what went wrong (the pointer stays
 * valid until the next failing call on the same thread).
 */

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum grouptop_status {
  GROUPTOP_OK = 0,
  GROUPTOP_ERR_PARSE = 1,    /* malformed input text */
  GROUPTOP_ERR_DOMAIN = 2,   /* valid input outside an operation's domain */
  GROUPTOP_ERR_RESOURCE = 3, /* a configured cap was exceeded */
  GROUPTOP_ERR_IO = 4,       /* reserved for callers doing file plumbing */
  GROUPTOP_ERR_INVALID_ARGUMENT = 5 /* null pointer or unknown option */
} grouptop_status;

/* Message for the most recent failure on this thread; never NULL. */
const char* grouptop_last_error(void);

/* Frees any string produced by this library. NULL is allowed. */
void grouptop_string_free(char* s);

/* ------------------------------------------------------------------ */
/* Opaque handles                                                      */

typedef struct grouptop_presentation grouptop_presentation;
typedef struct grouptop_complex grouptop_complex;

/*
 * Parses "< gens | relators >" text, or a file of named blocks
 * "name := < ... >" with `block` selecting the entry (pass NULL or ""
 * for a bare presentation / a lone block).
 */
grouptop_status grouptop_presentation_parse(const char* text,
                                            const char* block,
                                            grouptop_presentation** out);
void grouptop_presentation_free(grouptop_presentation* p);
/* Canonical "< a, b | ... >" rendering; parsing it back is the identity. */
grouptop_status grouptop_presentation_render(const grouptop_presentation* p,
                                             char** out);

/* Parses {"vertices": n, "simplices": [[...], ...]} JSON. */
grouptop_status grouptop_complex_parse(const char* json_text,
                                       grouptop_complex** out);
void grouptop_complex_free(grouptop_complex* c);
grouptop_status grouptop_complex_render(const grouptop_complex* c, char** out);
grouptop_status grouptop_complex_simplex_count(const grouptop_complex* c,
                                               uint64_t* out);

/* ------------------------------------------------------------------ */
/* Report runners.  as_json = 0 renders aligned text, anything else a  */
/* JSON object.  Identical inputs produce byte-identical reports.      */

/* Abelianization (Smith normal form of the exponent-sum matrix). */
grouptop_status grouptop_run_abelianize(const grouptop_presentation* p,
                                        int as_json, char** out);

/*
 * Coset enumeration over the subgroup generated by `subgroup_words`
 * (subgroup_len many word strings over p's generators; 0 for the
 * trivial subgroup, i.e. the group order).
 */
grouptop_status grouptop_run_enumerate(const grouptop_presentation* p,
                                       const char* const* subgroup_words,
                                       size_t subgroup_len,
                                       uint64_t max_cosets, int as_json,
                                       char** out);

/* Lower central and derived series of the finite group. */
grouptop_status grouptop_run_series(const grouptop_presentation* p,
                                    uint64_t max_cosets, uint64_t element_cap,
                                    int as_json, char** out);

/* Iterated torsion-kill trace down to a terminal group. */
grouptop_status grouptop_run_reduce(const grouptop_presentation* p,
                                    uint64_t max_cosets, uint64_t element_cap,
                                    int as_json, char** out);

/* Per-prime torsion / divisibility classification. */
grouptop_status grouptop_run_classify(const grouptop_presentation* p,
                                      uint64_t max_cosets,
                                      uint64_t element_cap, int as_json,
                                      char** out);

/*
 * Commutation-induced tensor epimorphism certificate on the lower
 * central series; level 0 runs every level down to stabilization.
 */
grouptop_status grouptop_run_lemma(const grouptop_presentation* p,
                                   uint32_t level, uint64_t max_cosets,
                                   uint64_t element_cap, int as_json,
                                   char** out);

/*
 * Pushout of p1 <- over -> p2.  images1/images2 hold one word per
 * generator of `over` (image_len of each); `over` may be NULL for the
 * free product, in which case image_len must be 0.
 */
grouptop_status grouptop_run_amalgam(const grouptop_presentation* p1,
                                     const grouptop_presentation* p2,
                                     const grouptop_presentation* over,
                                     const char* const* images1,
                                     const char* const* images2,
                                     size_t image_len, int as_json,
                                     char** out);

/*
 * (Co)homology of a complex, optionally relative to a subcomplex.
 * coefficients is "z", "q" or "z/N"; cochain != 0 selects cohomology.
 */
grouptop_status grouptop_run_homology(const grouptop_complex* c,
                                      const grouptop_complex* rel,
                                      const char* coefficients, int cochain,
                                      int as_json, char** out);

/*
 * Long-exact-sequence check for a short exact coefficient sequence.
 * sequence is "zn" (integers onto integers mod n) or "p2" (mod p into
 * mod p^2 onto mod p); modulus is the decimal n or p.
 */
grouptop_status grouptop_run_bockstein(const grouptop_complex* c,
                                       const grouptop_complex* rel,
                                       const char* sequence,
                                       const char* modulus, int as_json,
                                       char** out);

/*
 * Fate table of the relative disk class under repeated degree-two
 * patching: dim H^2(stage_g, boundary; Z/prime) for g = 0..generations.
 */
grouptop_status grouptop_run_pontryagin(uint64_t triangles,
                                        uint32_t generations,
                                        const char* prime,
                                        uint64_t simplex_cap, int as_json,
                                        char** out);

/*
 * Builds the stage complex reached after `generations` rounds of
 * patching on an n-triangle disk and returns it (and its marked
 * boundary) in the complex JSON format.  Either output pointer may be
 * NULL when that half is not wanted.
 */
grouptop_status grouptop_export_stage(uint64_t triangles,
                                      uint32_t generations,
                                      uint64_t simplex_cap,
                                      char** out_complex_json,
                                      char** out_boundary_json);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* GROUPTOP_GROUPTOP_H */
