#ifndef BRAID_GBASE_H
#define BRAID_GBASE_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum BgStatus {
  BG_STATUS_OK = 0,
  BG_STATUS_NULL_POINTER = 1,
  BG_STATUS_INVALID_UTF8 = 2,
  BG_STATUS_MALFORMED_WORD = 3,
  BG_STATUS_MALFORMED_G_BASE = 4,
  BG_STATUS_INVALID_G_BASE = 5,
  BG_STATUS_OUT_OF_RANGE = 6,
  BG_STATUS_STRAND_MISMATCH = 7,
  BG_STATUS_RESOURCE_EXCEEDED = 8,
  BG_STATUS_INTERNAL = 9,
} BgStatus;

/**
 * Opaque g-base link list.
 */
typedef struct BgGBase BgGBase;

/**
 * Opaque braid word.
 */
typedef struct BgWord BgWord;

/**
 * Message of the last failed call on this thread, or NULL if none.
 * The pointer stays valid until the next failing call on the same thread.
 */
const char *bg_last_error(void);

/**
 * # Safety
 * `s` must come from this library and must not be freed twice.
 */
void bg_string_free(char *s);

/**
 * Parses whitespace-separated signed generator indices, e.g. `"1 -2 1"`.
 *
 * # Safety
 * `text` must be a NUL-terminated string; `out` must be writable.
 */
enum BgStatus bg_word_parse(const char *text, size_t strands, struct BgWord **out);

/**
 * # Safety
 * `word` must be NULL or a handle from this library not yet freed.
 */
void bg_word_free(struct BgWord *word);

/**
 * # Safety
 * `word` must be a live handle; `out` must be writable.
 */
enum BgStatus bg_word_format(const struct BgWord *word, char **out);

/**
 * Number of letters, or 0 for NULL.
 *
 * # Safety
 * `word` must be NULL or a live handle.
 */
size_t bg_word_len(const struct BgWord *word);

/**
 * Acts with `word` on the standard g-base and returns the reduced list.
 *
 * # Safety
 * `word` must be a live handle; `out` must be writable.
 */
enum BgStatus bg_process_word(const struct BgWord *word, struct BgGBase **out);

/**
 * Parses a link list such as `"(-1,0) (1,0) (-1,0)"` and checks its structure.
 *
 * # Safety
 * `text` must be a NUL-terminated string; `out` must be writable.
 */
enum BgStatus bg_gbase_parse(const char *text, size_t strands, struct BgGBase **out);

/**
 * # Safety
 * `gbase` must be NULL or a handle from this library not yet freed.
 */
void bg_gbase_free(struct BgGBase *gbase);

/**
 * # Safety
 * `gbase` must be a live handle; `out` must be writable.
 */
enum BgStatus bg_gbase_format(const struct BgGBase *gbase, char **out);

/**
 * Number of links, or 0 for NULL.
 *
 * # Safety
 * `gbase` must be NULL or a live handle.
 */
size_t bg_gbase_len(const struct BgGBase *gbase);

/**
 * # Safety
 * Both handles must be live; `out` must be writable.
 */
enum BgStatus bg_gbase_equal(const struct BgGBase *a, const struct BgGBase *b, bool *out);

/**
 * # Safety
 * Both handles must be live; `out` must be writable.
 */
enum BgStatus bg_words_equal(const struct BgWord *a, const struct BgWord *b, bool *out);

/**
 * # Safety
 * `word` must be a live handle; `out` must be writable.
 */
enum BgStatus bg_is_identity(const struct BgWord *word, bool *out);

/**
 * Equality through the Artin action. A `syllable_limit` of 0 selects the default.
 *
 * # Safety
 * Both handles must be live; `out` must be writable.
 */
enum BgStatus bg_oracle_equal(const struct BgWord *a,
                              const struct BgWord *b,
                              size_t syllable_limit,
                              bool *out);

#endif  /* BRAID_GBASE_H */
