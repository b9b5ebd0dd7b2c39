#ifndef PACKCOL_H
#define PACKCOL_H

/* Generated by cbindgen from src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

#define PACKCOL_FAMILY_PATH 0

#define PACKCOL_FAMILY_CYCLE 1

#define PACKCOL_FAMILY_PATH_CORONA 2

#define PACKCOL_FAMILY_CYCLE_CORONA 3

typedef enum PackcolStatus {
  PACKCOL_STATUS_OK = 0,
  PACKCOL_STATUS_INVALID_ARGUMENT = 1,
  PACKCOL_STATUS_PARSE = 2,
  /**
   * The search budget ran out before an answer.
   */
  PACKCOL_STATUS_INDETERMINATE = 3,
  PACKCOL_STATUS_INTERNAL = 4,
  PACKCOL_STATUS_NULL_POINTER = 5,
  PACKCOL_STATUS_PANIC = 6,
} PackcolStatus;

/**
 * A vertex coloring, colors starting at 1.
 */
typedef struct PackcolColoring PackcolColoring;

/**
 * A graph or oriented graph.
 */
typedef struct PackcolGraph PackcolGraph;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Static description of a status code.
 */
const char *packcol_status_message(enum PackcolStatus status);

/**
 * Builds `P_n`, `C_n`, `P_n⊙pK_1` or `C_n⊙pK_1` (p = 0 for the plain families).
 *
 * # Safety
 * `out_graph` must be valid for writes.
 */
enum PackcolStatus packcol_graph_family(uint32_t family,
                                        size_t n,
                                        size_t p,
                                        struct PackcolGraph **out_graph);

/**
 * Parses the text graph format (NUL-terminated UTF-8).
 *
 * # Safety
 * `text` must be a NUL-terminated string and `out_graph` valid for writes.
 */
enum PackcolStatus packcol_graph_parse(const char *text, struct PackcolGraph **out_graph);

/**
 * Orients a family graph: one flag per edge in generation order (spine
 * edges `(i, i+1 mod n)`, then `(i, pendant)`); nonzero reverses the edge.
 *
 * # Safety
 * `graph` must be a live handle, `flips` readable for `len` bytes, `out_graph` valid for writes.
 */
enum PackcolStatus packcol_graph_orient(const struct PackcolGraph *graph,
                                        const uint8_t *flips,
                                        size_t len,
                                        struct PackcolGraph **out_graph);

/**
 * # Safety
 * `graph` must be null or a handle not yet freed.
 */
void packcol_graph_free(struct PackcolGraph *graph);

/**
 * Vertex count, 0 for a null handle.
 *
 * # Safety
 * `graph` must be null or a live handle.
 */
size_t packcol_graph_vertex_count(const struct PackcolGraph *graph);

/**
 * # Safety
 * `graph` must be null or a live handle.
 */
bool packcol_graph_is_oriented(const struct PackcolGraph *graph);

/**
 * Packing chromatic number of a family member from its closed form.
 *
 * # Safety
 * `out_k` must be valid for writes.
 */
enum PackcolStatus packcol_closed_form(uint32_t family, size_t n, size_t p, uint32_t *out_k);

/**
 * Optimal packing coloring of a family member.
 *
 * # Safety
 * `out_coloring` must be valid for writes.
 */
enum PackcolStatus packcol_construct(uint32_t family,
                                     size_t n,
                                     size_t p,
                                     struct PackcolColoring **out_coloring);

/**
 * Exact packing chromatic number by search. Zero limits mean the defaults
 * (a node cap, no time limit). `out_witness` may be null.
 *
 * # Safety
 * `graph` must be a live handle, `out_k` valid for writes, `out_witness` null or valid for writes.
 */
enum PackcolStatus packcol_pcn(const struct PackcolGraph *graph,
                               uint64_t node_limit,
                               uint64_t time_limit_ms,
                               uint32_t *out_k,
                               struct PackcolColoring **out_witness);

/**
 * Is `colors[0..len]` a packing coloring of the graph?
 *
 * # Safety
 * `graph` must be a live handle, `colors` readable for `len` values, `out_valid` valid for writes.
 */
enum PackcolStatus packcol_check(const struct PackcolGraph *graph,
                                 const uint32_t *colors,
                                 size_t len,
                                 bool *out_valid);

/**
 * Packing coloring of an oriented path, cycle, corona of one, or tree,
 * optimal except for trees (at most 3 colors). `out_coloring` may be null.
 *
 * # Safety
 * `graph` must be a live handle, `out_colors` valid for writes, `out_coloring` null or valid for writes.
 */
enum PackcolStatus packcol_color_oriented(const struct PackcolGraph *graph,
                                          uint32_t *out_colors,
                                          struct PackcolColoring **out_coloring);

/**
 * # Safety
 * `coloring` must be null or a live handle.
 */
size_t packcol_coloring_len(const struct PackcolColoring *coloring);

/**
 * Copies the colors into `buf`, which must hold exactly `len` values.
 *
 * # Safety
 * `coloring` must be a live handle and `buf` writable for `len` values.
 */
enum PackcolStatus packcol_coloring_copy(const struct PackcolColoring *coloring,
                                         uint32_t *buf,
                                         size_t len);

/**
 * # Safety
 * `coloring` must be null or a handle not yet freed.
 */
void packcol_coloring_free(struct PackcolColoring *coloring);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* PACKCOL_H */
