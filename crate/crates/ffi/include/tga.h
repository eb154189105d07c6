#ifndef TGA_H
#define TGA_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result of every call.
 */
typedef enum TgaStatus {
  TGA_STATUS_OK = 0,
  /**
   * A required pointer argument was null.
   */
  TGA_STATUS_NULL = 1,
  /**
   * A string argument was not UTF-8.
   */
  TGA_STATUS_UTF8 = 2,
  /**
   * Graph, weight or word text could not be read.
   */
  TGA_STATUS_PARSE = 3,
  /**
   * The input was well formed but unsuitable (a precondition failed).
   */
  TGA_STATUS_INVALID = 4,
  /**
   * An internal error or panic.
   */
  TGA_STATUS_INTERNAL = 5,
} TgaStatus;

/**
 * A parsed graph.
 */
typedef struct TgaGraph TgaGraph;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Parses a graph in the text or JSON format. On success `*out` owns a
 * handle to release with `tga_graph_free`.
 *
 * # Safety
 * `text` must be null or a nul-terminated string; `out` must be null or
 * valid for writes.
 */
enum TgaStatus tga_graph_parse(const char *text, struct TgaGraph **out);

/**
 * Releases a graph. Null is ignored.
 *
 * # Safety
 * `graph` must be null or a handle from `tga_graph_parse` not yet freed.
 */
void tga_graph_free(struct TgaGraph *graph);

/**
 * # Safety
 * `graph` must be null or a live handle; `out` null or valid for writes.
 */
enum TgaStatus tga_graph_vertex_count(const struct TgaGraph *graph, size_t *out);

/**
 * Minimal generators as `{"edges": [...], "pairs": [...]}`.
 *
 * # Safety
 * `graph` must be null or a live handle; `out` null or valid for writes.
 */
enum TgaStatus tga_minimal_generators(const struct TgaGraph *graph, char **out);

/**
 * Membership of a weight such as `"a=1,c=1"`. `*member` receives the
 * answer. When `report` is not null it receives the membership document,
 * with a certificate for non-members.
 *
 * # Safety
 * `graph` must be null or a live handle, `weight` null or nul-terminated,
 * `member` null or valid for writes, `report` null or valid for writes.
 */
enum TgaStatus tga_is_member(const struct TgaGraph *graph,
                             const char *weight,
                             bool *member,
                             char **report);

/**
 * Decomposition of a member into edges and exceptional pairs. Fails with
 * `TGA_STATUS_INVALID` for a non-member.
 *
 * # Safety
 * As for `tga_is_member`; `out` must be null or valid for writes.
 */
enum TgaStatus tga_decompose(const struct TgaGraph *graph, const char *weight, char **out);

/**
 * Equality of two words such as `"e:a-b c:x-y-z"`. `*equal` receives the
 * answer; when `report` is not null it receives the move log document.
 *
 * # Safety
 * `graph` must be null or a live handle, `left` and `right` null or
 * nul-terminated, `equal` null or valid for writes, `report` null or valid
 * for writes.
 */
enum TgaStatus tga_equal_words(const struct TgaGraph *graph,
                               const char *left,
                               const char *right,
                               bool *equal,
                               char **report);

/**
 * Admissible subgraphs with the generators of their primes. Graphs with
 * more than `cap` edges are refused with `TGA_STATUS_INVALID`.
 *
 * # Safety
 * `graph` must be null or a live handle; `out` null or valid for writes.
 */
enum TgaStatus tga_enumerate_admissible(const struct TgaGraph *graph, size_t cap, char **out);

/**
 * Releases a string returned by this library. Null is ignored.
 *
 * # Safety
 * `s` must be null or a string from this library not yet freed.
 */
void tga_string_free(char *s);

/**
 * The message for the last failed call on this thread, or null after a
 * success. Valid until the next call into the library on this thread.
 */
const char *tga_last_error(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* TGA_H */
