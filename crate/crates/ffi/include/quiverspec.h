#ifndef QUIVERSPEC_H
#define QUIVERSPEC_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum QsStatus {
  QS_STATUS_OK = 0,
  QS_STATUS_NULL_POINTER = 1,
  QS_STATUS_INVALID_UTF8 = 2,
  /**
   * Malformed text or a quiver with no positive symmetrizer.
   */
  QS_STATUS_INVALID_QUIVER = 3,
  QS_STATUS_OUT_OF_RANGE = 4,
  /**
   * Zero denominator.
   */
  QS_STATUS_BAD_THRESHOLD = 5,
  /**
   * The input is valid but the operation does not apply to it.
   */
  QS_STATUS_UNSUPPORTED = 6,
  QS_STATUS_PANIC = 7,
} QsStatus;

typedef enum QsClassKind {
  QS_CLASS_KIND_TWO_MAXIMAL = 0,
  QS_CLASS_KIND_NOT_TWO_MAXIMAL = 1,
  /**
   * Search limits were reached first.
   */
  QS_CLASS_KIND_UNDECIDED = 2,
} QsClassKind;

typedef enum QsFamily {
  QS_FAMILY_NONE = 0,
  /**
   * Two vertices joined by a double arrow.
   */
  QS_FAMILY_X2 = 1,
  QS_FAMILY_A = 2,
} QsFamily;

/**
 * Opaque quiver handle.
 */
typedef struct QsQuiver QsQuiver;

/**
 * Result of [`qs_classify_two_maximal`].
 */
typedef struct QsClassification {
  enum QsClassKind kind;
  /**
   * Set when `kind` is `TwoMaximal`.
   */
  enum QsFamily family;
  /**
   * Vertex count of the named representative, else 0.
   */
  size_t rank;
  /**
   * Radius of the witness when `kind` is `NotTwoMaximal`, else 0.
   */
  double witness_radius;
} QsClassification;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Parses the quiver text format and validates the result.
 *
 * # Safety
 * `text` must be a nul-terminated string and `out` a valid pointer.
 */
enum QsStatus qs_quiver_parse(const char *text, struct QsQuiver **out);

/**
 * # Safety
 * `q` must come from this library and not be freed twice. Null is ignored.
 */
void qs_quiver_free(struct QsQuiver *q);

/**
 * Number of vertices, 0 for a null handle.
 *
 * # Safety
 * `q` must be null or a live handle.
 */
size_t qs_quiver_order(const struct QsQuiver *q);

/**
 * Mutates at vertex `k` (1-based) into a new handle.
 *
 * # Safety
 * `q` must be a live handle and `out` a valid pointer.
 */
enum QsStatus qs_quiver_mutate(const struct QsQuiver *q, size_t k, struct QsQuiver **out);

/**
 * The quiver in the text format.
 *
 * # Safety
 * `q` must be a live handle and `out` a valid pointer. Free the result with
 * [`qs_string_free`].
 */
enum QsStatus qs_quiver_to_text(const struct QsQuiver *q, char **out);

/**
 * The exchange polynomial, e.g. `λ^3 + 2λ`, as UTF-8.
 *
 * # Safety
 * `q` must be a live handle and `out` a valid pointer. Free the result with
 * [`qs_string_free`].
 */
enum QsStatus qs_exchange_polynomial(const struct QsQuiver *q, char **out);

/**
 * Compares the exchange spectral radius with `num/den` exactly.
 * `ordering` receives -1, 0 or 1; `approx` (optional) the radius.
 *
 * # Safety
 * `q` must be a live handle, `ordering` a valid pointer, `approx` null or valid.
 */
enum QsStatus qs_radius_cmp(const struct QsQuiver *q,
                            int64_t num,
                            int64_t den,
                            int32_t *ordering,
                            double *approx);

/**
 * Decides 2-maximality of a connected skew-symmetric quiver with the default
 * search limits. When `witness` is non-null it receives the witness word as
 * comma-separated 1-based vertices (empty when the quiver itself is the
 * witness), or null if there is no witness.
 *
 * # Safety
 * `q` must be a live handle, `out` a valid pointer, `witness` null or valid.
 * Free a returned word with [`qs_string_free`].
 */
enum QsStatus qs_classify_two_maximal(const struct QsQuiver *q,
                                      struct QsClassification *out,
                                      char **witness);

/**
 * Message for the last failed call on this thread, or null. The pointer is
 * owned by the library and valid until the next call.
 */
const char *qs_last_error(void);

/**
 * # Safety
 * `s` must be null or a string returned by this library, freed once.
 */
void qs_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* QUIVERSPEC_H */
