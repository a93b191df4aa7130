#ifndef TWISTRIM_H
#define TWISTRIM_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Result codes. Zero is success.
typedef enum TrStatus {
  TR_STATUS_OK = 0,
  // A required pointer argument was null.
  TR_STATUS_NULL_POINTER = 1,
  // Input text was not valid UTF-8.
  TR_STATUS_INVALID_UTF8 = 2,
  // The knot expression did not parse or describe a knot.
  TR_STATUS_PARSE = 3,
  // Parameters such as `d` or `m` were rejected.
  TR_STATUS_INVALID_ARGUMENT = 4,
  // The computation failed for a reason other than bad input.
  TR_STATUS_COMPUTATION = 5,
  // The result does not fit in the requested output type.
  TR_STATUS_OVERFLOW = 6,
  // A Rust panic was caught at the boundary.
  TR_STATUS_PANIC = 7,
} TrStatus;

// Opaque knot handle.
typedef struct TrKnot TrKnot;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Parses a knot expression such as `T(2,3)#mirror(T(2,3))` into a new handle
// stored in `*out`.
//
// # Safety
// `text` must be a nul-terminated string and `out` a valid pointer.
enum TrStatus twistrim_knot_parse(const char *text, struct TrKnot **out);

// Releases a handle. Null is ignored.
//
// # Safety
// `knot` must be null or a handle from [`twistrim_knot_parse`] not yet freed.
void twistrim_knot_free(struct TrKnot *knot);

// Canonical text form of the knot expression.
//
// # Safety
// `knot` must be a live handle and `out` a valid pointer.
enum TrStatus twistrim_knot_to_string(const struct TrKnot *knot, char **out);

// Alexander polynomial as text, e.g. `t^2 - t + 1`.
//
// # Safety
// `knot` must be a live handle and `out` a valid pointer.
enum TrStatus twistrim_knot_alexander(const struct TrKnot *knot, char **out);

// Wirtinger presentation as JSON `{generators, relators, meridian}`.
//
// # Safety
// `knot` must be a live handle and `out` a valid pointer.
enum TrStatus twistrim_knot_presentation_json(const struct TrKnot *knot, char **out);

// Order of `H_1` of the `d`-fold cyclic branched cover. Sets `*infinite`
// and leaves `*order` at 0 when the group is infinite. Returns
// `Overflow` when the order exceeds 64 bits.
//
// # Safety
// `knot` must be a live handle; `order` and `infinite` valid pointers.
enum TrStatus twistrim_knot_branched_cover_order(const struct TrKnot *knot,
                                                 int64_t d,
                                                 uint64_t *order,
                                                 bool *infinite);

// Full surgery report as JSON. `cp2` implies `sw`. A `budget` of 0 selects
// the library default.
//
// # Safety
// `knot` must be a live handle and `out` a valid pointer.
enum TrStatus twistrim_classify_json(const struct TrKnot *knot,
                                     uint64_t d,
                                     int64_t m,
                                     bool sw,
                                     bool cp2,
                                     size_t budget,
                                     char **out);

// Releases a string returned by this library. Null is ignored.
//
// # Safety
// `s` must be null or a string from this library not yet freed.
void twistrim_string_free(char *s);

// Message for the most recent failure on this thread, or null. The pointer
// is valid until the next library call on the same thread.
const char *twistrim_last_error_message(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* TWISTRIM_H */
