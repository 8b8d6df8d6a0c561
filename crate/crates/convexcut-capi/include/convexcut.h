#pragma once

/* Generated by cbindgen from the convexcut-capi crate; do not edit by hand. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Result of a fallible call.
typedef enum CcStatus {
  // The call succeeded.
  CC_STATUS_OK = 0,
  // A required pointer argument was null.
  CC_STATUS_NULL_ARGUMENT = 1,
  // A string argument was not valid UTF-8.
  CC_STATUS_INVALID_UTF8 = 2,
  // The input text or edge list could not be turned into a graph.
  CC_STATUS_PARSE_ERROR = 3,
  // The graph lacks a property the call requires (for example it is
  // not bipartite, not two-connected, or a verification failed).
  CC_STATUS_PROPERTY_ERROR = 4,
  // A configured resource cap was exceeded.
  CC_STATUS_RESOURCE_LIMIT = 5,
  // An argument was outside the supported range.
  CC_STATUS_OUT_OF_RANGE = 6,
  // The call needs a plane embedding but the graph has none.
  CC_STATUS_MISSING_EMBEDDING = 7,
  // The library failed internally; please report the input.
  CC_STATUS_INTERNAL_ERROR = 8,
} CcStatus;

// An immutable list of convex cuts.
typedef struct CcCuts CcCuts;

// An immutable graph, optionally carrying a plane embedding.
typedef struct CcGraph CcGraph;

// Returns the library version as a static nul-terminated string.
const char *cc_version(void);

// Returns the message of the last failure on this thread, or an empty
// string.  The pointer stays valid until the next failing call on the
// same thread; do not free it.
const char *cc_last_error(void);

// Parses a graph from the text format (`graph`/`edge` lines, optional
// `rot` and `outer` lines).  When rotation lines are present the graph
// carries a plane embedding and can be passed to [`cc_cuts_plane`].
//
// # Safety
// `text` must point to a nul-terminated string and `out` must be a valid
// location for one pointer.  On success `*out` owns the graph and must be
// released with [`cc_graph_free`].
enum CcStatus cc_graph_parse(const char *text, struct CcGraph **out);

// Builds a graph from an endpoint array: edge `i` joins `endpoints[2*i]`
// and `endpoints[2*i + 1]`.  The graph carries no plane embedding.
//
// # Safety
// `endpoints` must point to `2 * edge_count` readable integers (it may be
// null only when `edge_count` is zero) and `out` must be a valid location
// for one pointer.  On success `*out` must be released with
// [`cc_graph_free`].
enum CcStatus cc_graph_from_edges(uint32_t vertex_count,
                                  const uint32_t *endpoints,
                                  size_t edge_count,
                                  struct CcGraph **out);

// Returns the number of vertices, or 0 for a null handle.
//
// # Safety
// `g` must be null or a live handle from this library.
uint32_t cc_graph_vertex_count(const struct CcGraph *g);

// Returns the number of edges, or 0 for a null handle.
//
// # Safety
// `g` must be null or a live handle from this library.
uint32_t cc_graph_edge_count(const struct CcGraph *g);

// True when the graph carries a plane embedding.
//
// # Safety
// `g` must be null or a live handle from this library.
bool cc_graph_has_embedding(const struct CcGraph *g);

// Releases a graph handle.  Null is ignored.
//
// # Safety
// `g` must be null or an unreleased handle from this library.
void cc_graph_free(struct CcGraph *g);

// Enumerates all convex cuts of a connected bipartite graph.
//
// # Safety
// `g` must be a live graph handle and `out` a valid location for one
// pointer.  On success `*out` must be released with [`cc_cuts_free`].
enum CcStatus cc_cuts_bipartite(const struct CcGraph *g, struct CcCuts **out);

// Enumerates all convex cuts of a two-connected plane graph.  The graph
// must carry an embedding (see [`cc_graph_parse`]).  `max_frontier` caps
// the number of queued walk states; pass 0 for the default of 1,000,000.
//
// # Safety
// `g` must be a live graph handle and `out` a valid location for one
// pointer.  On success `*out` must be released with [`cc_cuts_free`].
enum CcStatus cc_cuts_plane(const struct CcGraph *g, size_t max_frontier, struct CcCuts **out);

// Enumerates all convex cuts of any connected graph by exhaustive search.
// Supports at most 16 vertices.
//
// # Safety
// `g` must be a live graph handle and `out` a valid location for one
// pointer.  On success `*out` must be released with [`cc_cuts_free`].
enum CcStatus cc_cuts_exhaustive(const struct CcGraph *g, struct CcCuts **out);

// Returns the number of cuts, or 0 for a null handle.
//
// # Safety
// `cuts` must be null or a live handle from this library.
size_t cc_cuts_count(const struct CcCuts *cuts);

// Returns the edge ids of one cut, writing the length through `len`.
// The pointer stays valid until the handle is freed; a null return means
// the index was out of range.
//
// # Safety
// `cuts` must be null or a live handle; `len` must be null or writable.
const uint32_t *cc_cuts_edges(const struct CcCuts *cuts, size_t index, size_t *len);

// Returns the vertices of one side of a cut, writing the length through
// `len`.  Same lifetime rules as [`cc_cuts_edges`].
//
// # Safety
// `cuts` must be null or a live handle; `len` must be null or writable.
const uint32_t *cc_cuts_side(const struct CcCuts *cuts, size_t index, size_t *len);

// Returns the vertices of the other side of a cut, writing the length
// through `len`.  Same lifetime rules as [`cc_cuts_edges`].
//
// # Safety
// `cuts` must be null or a live handle; `len` must be null or writable.
const uint32_t *cc_cuts_other_side(const struct CcCuts *cuts, size_t index, size_t *len);

// Returns 1 when the cut-set corresponds to a closed alternating walk,
// 0 when it does not, and -1 when the notion does not apply (the cuts
// did not come from the plane enumeration) or the index is out of range.
//
// # Safety
// `cuts` must be null or a live handle from this library.
int32_t cc_cuts_is_cyclic(const struct CcCuts *cuts, size_t index);

// Releases a cut-list handle.  Null is ignored.
//
// # Safety
// `cuts` must be null or an unreleased handle from this library.
void cc_cuts_free(struct CcCuts *cuts);
