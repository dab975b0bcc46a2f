/* Copyright 2026 The nakayama-birep Authors.
 * SPDX-License-Identifier: Apache-2.0
 *
 * C interface to the nakayama library. Objects are opaque handles; every
 * function returns an nkb_status. Strings returned through char** are owned
 * by the caller and released with nkb_string_free.
 */

#ifndef NAKAYAMA_H
#define NAKAYAMA_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define NKB_API __declspec(dllexport)
#else
#define NKB_API __attribute__((visibility("default")))
#endif

typedef enum nkb_status {
  NKB_OK = 0,
  NKB_ERR_INVALID_ARGUMENT = 1,
  /* The computation finished but one of its verifications failed. Any JSON
   * output is still produced. */
  NKB_ERR_VERIFICATION = 2,
  NKB_ERR_INTERNAL = 3,
  NKB_ERR_NULL = 4
} nkb_status;

typedef struct nkb_context nkb_context;
typedef struct nkb_bimodule nkb_bimodule;
typedef struct nkb_birep nkb_birep;

NKB_API const char* nkb_version(void);
NKB_API const char* nkb_status_name(nkb_status status);

/* A context carries the random seed and the last error message. */
NKB_API nkb_status nkb_context_create(uint64_t seed, nkb_context** out);
NKB_API void nkb_context_destroy(nkb_context* ctx);
NKB_API const char* nkb_last_error(const nkb_context* ctx);

NKB_API void nkb_string_free(char* s);

/* Bimodules. Labels look like "N:1|2:k=1", "P:2|1" or "L:1|1". */
NKB_API nkb_status nkb_bimodule_from_label(nkb_context* ctx, int n, const char* label, nkb_bimodule** out);
NKB_API nkb_status nkb_bimodule_tensor(nkb_context* ctx, const nkb_bimodule* x, const nkb_bimodule* y,
                                       nkb_bimodule** out);
NKB_API nkb_status nkb_bimodule_dimension(const nkb_bimodule* x, size_t* out);
NKB_API nkb_status nkb_bimodule_is_isomorphic(nkb_context* ctx, const nkb_bimodule* x, const nkb_bimodule* y,
                                              int* out);
NKB_API nkb_status nkb_bimodule_json(nkb_context* ctx, const nkb_bimodule* x, char** out);
/* Decomposition into catalog members with at most max_valleys valleys.
 * NKB_ERR_VERIFICATION when a residual remains. */
NKB_API nkb_status nkb_bimodule_decompose_json(nkb_context* ctx, const nkb_bimodule* x, int max_valleys, char** out);
NKB_API void nkb_bimodule_destroy(nkb_bimodule* x);

/* Cell birepresentations. */
NKB_API nkb_status nkb_birep_cell(nkb_context* ctx, int n, int k, int j, nkb_birep** out);
NKB_API nkb_status nkb_birep_localize(nkb_context* ctx, const nkb_birep* b, const int* contract, size_t count,
                                      nkb_birep** out);
NKB_API nkb_status nkb_birep_rank(const nkb_birep* b, size_t* out);
NKB_API nkb_status nkb_birep_is_simple_transitive(const nkb_birep* b, int* out);
NKB_API nkb_status nkb_birep_json(nkb_context* ctx, const nkb_birep* b, char** out);
NKB_API void nkb_birep_destroy(nkb_birep* b);

/* Reports. Each writes a JSON document and returns NKB_ERR_VERIFICATION
 * when a check inside it failed. */
NKB_API nkb_status nkb_algebra_report(nkb_context* ctx, int n, char** out);
NKB_API nkb_status nkb_catalog_report(nkb_context* ctx, int n, int max_valleys, char** out);
NKB_API nkb_status nkb_tensor_report(nkb_context* ctx, int n, const char* u, const char* v, char** out);
NKB_API nkb_status nkb_multable_report(nkb_context* ctx, int n, int k, char** out);
NKB_API nkb_status nkb_cells_report(nkb_context* ctx, int n, int max_valleys, char** out);
NKB_API nkb_status nkb_adjunction_report(nkb_context* ctx, int n, int k, char** out);
NKB_API nkb_status nkb_cellrep_report(nkb_context* ctx, int n, int k, int j, char** out);
NKB_API nkb_status nkb_localize_report(nkb_context* ctx, int n, int k, int j, const int* contract, size_t count,
                                       char** out);
NKB_API nkb_status nkb_classify_report(nkb_context* ctx, int n, int k, char** out);

#ifdef __cplusplus
}
#endif

#endif /* NAKAYAMA_H */
