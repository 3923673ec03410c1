#ifndef DTRY_H
#define DTRY_H

/* Generated by cbindgen from crates/ffi. Do not edit by hand. */

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

// Result of every fallible call.
typedef enum DtryStatus {
  DTRY_STATUS_OK = 0,
  DTRY_STATUS_NULL_POINTER = 1,
  DTRY_STATUS_INVALID_UTF8 = 2,
  DTRY_STATUS_SYNTAX = 3,
  DTRY_STATUS_BAD_NAME = 4,
  DTRY_STATUS_BAD_PATH = 5,
  DTRY_STATUS_DUPLICATE_PATH = 6,
  DTRY_STATUS_PREFIX_CONFLICT = 7,
  DTRY_STATUS_EMPTY_SUBDIR = 8,
  DTRY_STATUS_NOT_FOUND = 9,
  DTRY_STATUS_NOT_A_LEAF = 10,
} DtryStatus;

// Opaque directory handle.
typedef struct DtryDirectory DtryDirectory;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// The message describing the most recent failure on this thread, or NULL.
// The pointer stays valid until the next call into this library on the
// same thread.
const char *dtry_last_error(void);

// The diagnostic code name for a status, e.g. `E_PREFIX_CONFLICT`. Static storage.
const char *dtry_status_name(enum DtryStatus status);

// A new empty directory.
struct DtryDirectory *dtry_new_empty(void);

// # Safety
// `dir` must be NULL or a handle from this library that has not been freed.
void dtry_free(struct DtryDirectory *dir);

// # Safety
// `s` must be NULL or a string returned by this library that has not been freed.
void dtry_string_free(char *s);

// Parses a flat `path = value` document into a new handle stored in `*out`.
//
// # Safety
// `text` must be a NUL-terminated string and `out` a valid pointer.
enum DtryStatus dtry_parse_flat(const char *text, struct DtryDirectory **out);

// Parses a nested JSON document. Leaf values are stored in their flat
// spelling.
//
// # Safety
// `text` must be a NUL-terminated string and `out` a valid pointer.
enum DtryStatus dtry_parse_nested(const char *text, struct DtryDirectory **out);

// Canonical flat text, or NULL if `dir` is NULL. Free with `dtry_string_free`.
//
// # Safety
// `dir` must be NULL or a live handle.
char *dtry_emit_flat(const struct DtryDirectory *dir);

// Canonical nested JSON text, or NULL if `dir` is NULL. Free with `dtry_string_free`.
//
// # Safety
// `dir` must be NULL or a live handle.
char *dtry_emit_nested(const struct DtryDirectory *dir);

// Number of complete paths; 0 for NULL.
//
// # Safety
// `dir` must be NULL or a live handle.
uintptr_t dtry_leaf_count(const struct DtryDirectory *dir);

// Copies the value at the complete path `path` into `*out_value`.
//
// # Safety
// `dir` must be a live handle, `path` a NUL-terminated string and
// `out_value` a valid pointer.
enum DtryStatus dtry_get(const struct DtryDirectory *dir, const char *path, char **out_value);

// Stores the subdirectory at `path` in a new handle `*out`.
//
// # Safety
// `dir` must be a live handle, `path` a NUL-terminated string and `out` a
// valid pointer.
enum DtryStatus dtry_lookup(const struct DtryDirectory *dir,
                            const char *path,
                            struct DtryDirectory **out);

// Adds a binding. On failure the directory is left unchanged.
//
// # Safety
// `dir` must be a live handle; `path` and `value` NUL-terminated strings.
enum DtryStatus dtry_insert(struct DtryDirectory *dir, const char *path, const char *value);

// Places each `dirs[i]` under `names[i]` and stores the result in `*out`.
// Names must be valid and distinct; `count` must be at least 1.
//
// # Safety
// `names` and `dirs` must each point to `count` valid entries.
enum DtryStatus dtry_merge(const char *const *names,
                           const struct DtryDirectory *const *dirs,
                           uintptr_t count,
                           struct DtryDirectory **out);

// Checks that `count` paths are valid, distinct and prefix-free without
// building a directory.
//
// # Safety
// `paths` must point to `count` NUL-terminated strings.
enum DtryStatus dtry_check_prefix_free(const char *const *paths, uintptr_t count);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* DTRY_H */
