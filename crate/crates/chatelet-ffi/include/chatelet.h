#ifndef CHATELET_H
#define CHATELET_H

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status codes returned by every fallible entry point.
 */
typedef enum ChateletStatus {
  ChateletStatus_Ok = 0,
  /**
   * The cubic has an integer root.
   */
  ChateletStatus_Reducible = 1,
  /**
   * One of the parity conditions fails.
   */
  ChateletStatus_ParityViolation = 2,
  /**
   * Arguments violate a precondition (null pointer, bad number, ...).
   */
  ChateletStatus_InvalidArgument = 3,
  /**
   * Factorization budget exhausted.
   */
  ChateletStatus_EffortExceeded = 4,
  /**
   * Internal invariant failure.
   */
  ChateletStatus_Internal = 5,
} ChateletStatus;

/**
 * Opaque handle to a validated cubic polynomial.
 */
typedef struct ChateletPoly ChateletPoly;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Validates the monic cubic x³ + a2·x² + a1·x + a0 (including the parity
 * conditions when `relaxed` is 0) and returns an opaque handle through
 * `out`. The handle must be released with `chatelet_poly_free`.
 */
enum ChateletStatus chatelet_poly_new(const char *a2,
                                      const char *a1,
                                      const char *a0,
                                      int relaxed,
                                      struct ChateletPoly **out);

/**
 * Releases a polynomial handle. Null is a no-op.
 */
void chatelet_poly_free(struct ChateletPoly *poly);

/**
 * Tests whether the decimal integer `n` is a sum of two squares.
 * On success sets `member`, and fills `detail` with either the witness
 * "a,b" (a² + b² = n) or the obstruction ("negative" or "p^e").
 */
enum ChateletStatus chatelet_two_squares(const char *n, int *member, char **detail);

/**
 * Enumerates the solution family for the window (X, c = c_num/c_den) and
 * returns it as JSON-lines (one certified solution per line, the same
 * schema the CLI emits). `out` must be freed with `chatelet_string_free`.
 */
enum ChateletStatus chatelet_enumerate(const struct ChateletPoly *poly,
                                       const char *x,
                                       const char *c_num,
                                       const char *c_den,
                                       char **out);

/**
 * Releases a string allocated by this library. Null is a no-op.
 */
void chatelet_string_free(char *s);

#ifdef __cplusplus
} // extern "C"
#endif // __cplusplus

#endif /* CHATELET_H */
