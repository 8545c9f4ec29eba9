#ifndef MCBRICK_H
#define MCBRICK_H

#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>

typedef enum McStatus {
  MC_STATUS_OK = 0,
  MC_STATUS_NULL_POINTER = 1,
  MC_STATUS_INVALID_ARGUMENT = 2,
  MC_STATUS_PARSE = 3,
  MC_STATUS_TOO_LARGE = 4,
  MC_STATUS_NOT_MATCHING_COVERED = 5,
  MC_STATUS_PRECONDITION = 6,
  // The output buffer is too small; the required length was written.
  MC_STATUS_BUFFER_TOO_SMALL = 7,
  MC_STATUS_PANIC = 8,
} McStatus;

// Opaque graph handle.
typedef struct McGraph McGraph;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message describing the last failure on this thread. Valid until the
// next failing call on the same thread.
const char *mc_last_error(void);

// Static description of a status code.
const char *mc_status_message(enum McStatus status);

// Builds a graph on `n` vertices from `edge_count` endpoint pairs stored
// flat in `endpoints` (`2 * edge_count` entries). Edge `i` gets id `i`.
//
// # Safety
// `endpoints` must point to `2 * edge_count` readable values (or may be
// null when `edge_count` is 0) and `out` must be writable.
enum McStatus mc_graph_from_edges(uintptr_t n,
                                  const uint32_t *endpoints,
                                  uintptr_t edge_count,
                                  struct McGraph **out);

// Parses one graph6 string (an optional `>>graph6<<` header is allowed).
//
// # Safety
// `text` must be a nul-terminated string and `out` writable.
enum McStatus mc_graph_from_graph6(const char *text, struct McGraph **out);

// Releases a handle. Null is ignored.
//
// # Safety
// `g` must come from this library and not be used afterwards.
void mc_graph_free(struct McGraph *g);

// Releases a string returned by this library. Null is ignored.
//
// # Safety
// `s` must come from this library and not be used afterwards.
void mc_string_free(char *s);

// # Safety
// `g` must be a live handle and `out` writable.
enum McStatus mc_graph_vertex_count(const struct McGraph *g, uintptr_t *out);

// # Safety
// `g` must be a live handle and `out` writable.
enum McStatus mc_graph_edge_count(const struct McGraph *g, uintptr_t *out);

// graph6 encoding; fails for graphs with parallel edges.
//
// # Safety
// `g` must be a live handle and `out` writable.
enum McStatus mc_graph_to_graph6(const struct McGraph *g, char **out);

// # Safety
// `g` must be a live handle and `out` writable.
enum McStatus mc_is_matching_covered(const struct McGraph *g, bool *out);

// # Safety
// `g` must be a live handle and `out` writable.
enum McStatus mc_is_brick(const struct McGraph *g, bool *out);

// Fails with `TooLarge` above 16 vertices.
//
// # Safety
// `g` must be a live handle and `out` writable.
enum McStatus mc_is_brace(const struct McGraph *g, bool *out);

// # Safety
// `g` must be a live handle and `out` writable.
enum McStatus mc_is_near_bipartite(const struct McGraph *g, bool *out);

// # Safety
// `g` must be a live handle and `out` writable.
enum McStatus mc_is_triladder(const struct McGraph *g, bool *out);

// Whether a 3-connected cubic graph has a 3-cut decomposition into K4s.
//
// # Safety
// `g` must be a live handle and `out` writable.
enum McStatus mc_has_k4_decomposition(const struct McGraph *g, bool *out);

// Writes the ids of the removable edges, ascending, into `ids`. `len`
// receives the count; when it exceeds `capacity` nothing is copied and
// `BufferTooSmall` is returned.
//
// # Safety
// `g` must be a live handle, `ids` writable for `capacity` values, `len`
// writable.
enum McStatus mc_removable_edges(const struct McGraph *g,
                                 uint32_t *ids,
                                 uintptr_t capacity,
                                 uintptr_t *len);

// Writes the removable doubletons as flat id pairs into `pairs`
// (`2 * capacity` slots). `len` receives the number of pairs.
//
// # Safety
// `g` must be a live handle, `pairs` writable for `2 * capacity` values,
// `len` writable.
enum McStatus mc_removable_doubletons(const struct McGraph *g,
                                      uint32_t *pairs,
                                      uintptr_t capacity,
                                      uintptr_t *len);

// The full analysis report as a JSON document.
//
// # Safety
// `g` must be a live handle and `out` writable.
enum McStatus mc_analyze_json(const struct McGraph *g, char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* MCBRICK_H */
