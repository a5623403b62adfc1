#ifndef HOMLEIBNIZ_H
#define HOMLEIBNIZ_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * `hl_algebra_validate` flag: the Hom-Leibniz identity holds.
 */
#define HL_HOM_LEIBNIZ 1

/**
 * `hl_algebra_validate` flag: the twist is an invertible automorphism.
 */
#define HL_REGULAR 2

/**
 * `hl_algebra_validate` flag: antisymmetry and the Hom-Jacobi identity hold.
 */
#define HL_HOM_LIE 4

typedef enum HlStatus {
  HL_STATUS_OK = 0,
  HL_STATUS_NULL_POINTER = 1,
  HL_STATUS_INVALID_UTF8 = 2,
  HL_STATUS_PARSE = 3,
  HL_STATUS_IO = 4,
  /**
   * A mathematical rejection such as a non-split algebra.
   */
  HL_STATUS_MATH = 5,
  HL_STATUS_INTERNAL = 6,
} HlStatus;

typedef enum HlVerdict {
  HL_VERDICT_SIMPLE = 0,
  HL_VERDICT_NOT_SIMPLE = 1,
  HL_VERDICT_INCONCLUSIVE = 2,
} HlVerdict;

/**
 * An algebra together with the `H` basis read from its file.
 */
typedef struct HlAlgebra HlAlgebra;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Parses an algebra file held in memory.
 *
 * # Safety
 * `json` must be a NUL-terminated string and `out` a valid pointer.
 */
enum HlStatus hl_algebra_from_json(const char *json, struct HlAlgebra **out);

/**
 * Reads and parses an algebra file.
 *
 * # Safety
 * `path` must be a NUL-terminated string and `out` a valid pointer.
 */
enum HlStatus hl_algebra_load_file(const char *path, struct HlAlgebra **out);

/**
 * Loads a bundled algebra by name (`"sl2"`, `"d6"`, ...).
 *
 * # Safety
 * `name` must be a NUL-terminated string and `out` a valid pointer.
 */
enum HlStatus hl_algebra_corpus(const char *name, struct HlAlgebra **out);

/**
 * Releases a handle. Null is ignored.
 *
 * # Safety
 * `a` must come from this library and not be used afterwards.
 */
void hl_algebra_free(struct HlAlgebra *a);

/**
 * # Safety
 * `a` must be a live handle and `out` a valid pointer.
 */
enum HlStatus hl_algebra_dim(const struct HlAlgebra *a, size_t *out);

/**
 * Writes a bit set of `HL_HOM_LEIBNIZ`, `HL_REGULAR` and `HL_HOM_LIE`.
 *
 * # Safety
 * `a` must be a live handle and `out` a valid pointer.
 */
enum HlStatus hl_algebra_validate(const struct HlAlgebra *a, uint32_t *out);

/**
 * Number of roots of the split decomposition for the handle's `H`.
 *
 * # Safety
 * `a` must be a live handle and `out` a valid pointer.
 */
enum HlStatus hl_algebra_root_count(const struct HlAlgebra *a, size_t *out);

/**
 * Number of connection classes of roots.
 *
 * # Safety
 * `a` must be a live handle and `out` a valid pointer.
 */
enum HlStatus hl_algebra_class_count(const struct HlAlgebra *a, size_t *out);

/**
 * # Safety
 * `a` must be a live handle and `out` a valid pointer.
 */
enum HlStatus hl_algebra_simplicity(const struct HlAlgebra *a, enum HlVerdict *out);

/**
 * The full JSON report. Release the string with `hl_string_free`.
 *
 * # Safety
 * `a` must be a live handle and `out` a valid pointer.
 */
enum HlStatus hl_algebra_report_json(const struct HlAlgebra *a, char **out);

/**
 * # Safety
 * `s` must come from this library and not be used afterwards.
 */
void hl_string_free(char *s);

/**
 * Message for the last failed call on this thread, or null. The pointer is
 * valid until the next failing call on the same thread.
 */
const char *hl_last_error_message(void);

/**
 * Static name of a status code.
 */
const char *hl_status_name(enum HlStatus status);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* HOMLEIBNIZ_H */
