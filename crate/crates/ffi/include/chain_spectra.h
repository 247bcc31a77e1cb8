#ifndef CHAIN_SPECTRA_H
#define CHAIN_SPECTRA_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Status code returned by every fallible function.
typedef enum CsStatus {
  CS_STATUS_OK = 0,
  CS_STATUS_NULL_POINTER = 1,
  CS_STATUS_INVALID_ARGUMENT = 2,
  CS_STATUS_INVALID_GRAPH = 3,
  CS_STATUS_BUFFER_TOO_SMALL = 4,
  CS_STATUS_NUMERICAL_FAILURE = 5,
  CS_STATUS_PANIC = 6,
} CsStatus;

// Opaque graph handle.
typedef struct CsGraph CsGraph;

// The number `a_num/a_den + (b_num/b_den)·√5`.
typedef struct CsQuadratic {
  int64_t a_num;
  int64_t a_den;
  int64_t b_num;
  int64_t b_den;
} CsQuadratic;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Builds the chain graph with cells `u_sizes[0..k]` and `v_sizes[0..k]`.
//
// # Safety
// `u_sizes` and `v_sizes` must point to `k` readable values and `out` to
// writable storage for one handle.
enum CsStatus cs_graph_from_spec(const size_t *u_sizes,
                                 const size_t *v_sizes,
                                 size_t k,
                                 struct CsGraph **out);

// Builds the half graph `H(k)`.
//
// # Safety
// `out` must point to writable storage for one handle.
enum CsStatus cs_graph_half(size_t k, struct CsGraph **out);

// Parses a graph document (chain spec or edge list), NUL-terminated UTF-8.
//
// # Safety
// `text` must be a NUL-terminated string and `out` writable.
enum CsStatus cs_graph_from_json(const char *text, struct CsGraph **out);

// Releases a handle. Null is ignored.
//
// # Safety
// `graph` must come from a `cs_graph_*` constructor and not be freed twice.
void cs_graph_free(struct CsGraph *graph);

// Number of vertices, or 0 for a null handle.
//
// # Safety
// `graph` must be null or a live handle.
size_t cs_graph_vertex_count(const struct CsGraph *graph);

// Writes the graph document into `buf` (NUL-terminated). `needed`, when
// non-null, receives the required size including the terminator, also on
// `BUFFER_TOO_SMALL`.
//
// # Safety
// `buf` must have room for `len` bytes (or be null with `len == 0`).
enum CsStatus cs_graph_to_json(const struct CsGraph *graph, char *buf, size_t len, size_t *needed);

// Whether the graph is bipartite with nested neighborhoods.
//
// # Safety
// `graph` must be a live handle and `out` writable.
enum CsStatus cs_graph_is_chain(const struct CsGraph *graph, bool *out);

// Eigenvalues in descending order into `out[0..n]`.
//
// # Safety
// `out` must have room for `len` doubles.
enum CsStatus cs_graph_spectrum(const struct CsGraph *graph, double *out, size_t len);

// Exact multiplicity of `lambda` as an eigenvalue.
//
// # Safety
// `graph` must be a live handle and `out` writable.
enum CsStatus cs_exact_multiplicity(const struct CsGraph *graph,
                                    struct CsQuadratic lambda,
                                    size_t *out);

// `flags[v]` is set to 1 when `v` is downer for `lambda` and 0 otherwise,
// decided by exact rank.
//
// # Safety
// `flags` must have room for `len` bytes.
enum CsStatus cs_downer_flags(const struct CsGraph *graph,
                              struct CsQuadratic lambda,
                              uint8_t *flags,
                              size_t len);

// Sets `ok` when no eigenvalue has `0 < |λ| < 1/2`. `closest`, when
// non-null, receives the nonzero eigenvalue of least magnitude (NaN if
// there is none).
//
// # Safety
// `ok` must be writable; `closest` may be null.
enum CsStatus cs_gap_check(const struct CsGraph *graph, bool *ok, double *closest);

// Exact check of the periodic eigenvectors of half graphs for every
// admissible `k ≤ max_k`. `period` is 6 or 10.
//
// # Safety
// `passed` must be writable.
enum CsStatus cs_verify_pattern(uint32_t period, size_t max_k, bool *passed);

// Message for the last failed call on this thread, or null. Valid until
// the next call into this library on the same thread.
const char *cs_last_error_message(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* CHAIN_SPECTRA_H */
