#ifndef CONTRACTA_H
#define CONTRACTA_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result codes of the C interface.
 */
typedef enum ContractaStatus {
  CONTRACTA_STATUS_OK = 0,
  CONTRACTA_STATUS_NULL_POINTER = 1,
  CONTRACTA_STATUS_INVALID_UTF8 = 2,
  CONTRACTA_STATUS_PARSE = 3,
  CONTRACTA_STATUS_INVALID_ARGUMENT = 4,
  CONTRACTA_STATUS_LOW_CONNECTIVITY = 5,
  CONTRACTA_STATUS_INTERNAL = 6,
  CONTRACTA_STATUS_PANIC = 7,
} ContractaStatus;

/**
 * Opaque graph handle.
 */
typedef struct ContractaGraph ContractaGraph;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Parses one graph6 or sparse6 line (optional `>>graph6<<` header,
 * trailing whitespace ignored).
 *
 * # Safety
 * `text` must be a NUL-terminated string and `out` a valid pointer.
 */
enum ContractaStatus contracta_graph_from_graph6(const char *text, struct ContractaGraph **out);

/**
 * Builds a graph on `n` vertices from `edge_count` pairs stored flat in
 * `edges` (`2 * edge_count` entries). `edges` may be null when
 * `edge_count` is zero.
 *
 * # Safety
 * `edges` must point to `2 * edge_count` readable values and `out` must be valid.
 */
enum ContractaStatus contracta_graph_from_edges(size_t n,
                                                const size_t *edges,
                                                size_t edge_count,
                                                struct ContractaGraph **out);

/**
 * Releases a handle. Null is ignored.
 *
 * # Safety
 * `g` must come from this library and must not be used afterwards.
 */
void contracta_graph_free(struct ContractaGraph *g);

/**
 * Number of vertices, or 0 for a null handle.
 *
 * # Safety
 * `g` must be null or a live handle.
 */
size_t contracta_graph_order(const struct ContractaGraph *g);

/**
 * Number of edges, or 0 for a null handle.
 *
 * # Safety
 * `g` must be null or a live handle.
 */
size_t contracta_graph_size(const struct ContractaGraph *g);

/**
 * # Safety
 * `g` must be a live handle and `out` a valid pointer.
 */
enum ContractaStatus contracta_vertex_connectivity(const struct ContractaGraph *g, size_t *out);

/**
 * Whether identifying the non-adjacent vertices `u` and `v` keeps the
 * graph 3-connected. The graph must be 3-connected with at least five
 * vertices.
 *
 * # Safety
 * `g` must be a live handle and `out` a valid pointer.
 */
enum ContractaStatus contracta_is_contractible(const struct ContractaGraph *g,
                                               size_t u,
                                               size_t v,
                                               bool *out);

/**
 * Full classification as a JSON object with fields `n`, `kappa`,
 * `nonEdgeCount`, `contractible` and `tags`.
 *
 * # Safety
 * `g` must be a live handle and `out` a valid pointer. Free the result
 * with [`contracta_string_free`].
 */
enum ContractaStatus contracta_classify_json(const struct ContractaGraph *g, char **out);

/**
 * graph6 string of the canonical form.
 *
 * # Safety
 * `g` must be a live handle and `out` a valid pointer. Free the result
 * with [`contracta_string_free`].
 */
enum ContractaStatus contracta_canonical_graph6(const struct ContractaGraph *g, char **out);

/**
 * # Safety
 * `g` and `h` must be live handles and `out` a valid pointer.
 */
enum ContractaStatus contracta_are_isomorphic(const struct ContractaGraph *g,
                                              const struct ContractaGraph *h,
                                              bool *out);

/**
 * Releases a string returned by this library. Null is ignored.
 *
 * # Safety
 * `s` must come from this library and must not be used afterwards.
 */
void contracta_string_free(char *s);

/**
 * Message of the last failure on this thread, or null. The pointer stays
 * valid until the next failing call on the same thread.
 */
const char *contracta_last_error(void);

/**
 * Library version as a static string.
 */
const char *contracta_version(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* CONTRACTA_H */
