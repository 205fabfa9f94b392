/*
 * C API for the cocart toolkit: deciding the equivalent characterisations of
 * cocartesianness for finite magmal categories, synthesizing cocartesian
 * structure by idempotent splitting / Karoubi completion, and running the
 * finite-set counterexample walkthrough.
 *
 * All functions return a cocart_status; COCART_OK means the command ran to
 * completion (mathematical verdicts, positive or negative, live in the
 * report). Handles are opaque and must be released with the matching _free
 * function. cocart_last_error() returns a thread-local message describing
 * the most recent failure on the calling thread.
 */

#ifndef COCART_H
#define COCART_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum cocart_status {
  COCART_OK = 0,
  COCART_ERR_PARSE = 1,             /* malformed bundle text */
  COCART_ERR_RESOLVE = 2,           /* dangling object/morphism name */
  COCART_ERR_LAW = 3,               /* tables violate category/magmal laws */
  COCART_ERR_MISSING_STRUCTURE = 4, /* command needs an absent bundle block */
  COCART_ERR_LIMIT = 5,             /* enumeration budget exhausted */
  COCART_ERR_NOT_INVERTIBLE = 6,    /* a required inverse does not exist */
  COCART_ERR_INVARIANT = 7,         /* inputs break a stated precondition */
  COCART_ERR_IO = 8,
  COCART_ERR_USAGE = 9,
  COCART_ERR_INTERNAL = 10
} cocart_status;

typedef struct cocart_bundle cocart_bundle;
typedef struct cocart_report cocart_report;

const char* cocart_version(void);

/* Thread-local message for the last failing call on this thread. */
const char* cocart_last_error(void);

void cocart_string_free(char* s);

/* Bundles ---------------------------------------------------------------- */

/* Parse with full semantic validation (laws included). */
cocart_status cocart_bundle_parse(const char* text, cocart_bundle** out);
cocart_status cocart_bundle_load_file(const char* path, cocart_bundle** out);
void cocart_bundle_free(cocart_bundle* b);

/* Canonical serialization; free the string with cocart_string_free. */
cocart_status cocart_bundle_serialize(const cocart_bundle* b, char** out_text);

/* Commands --------------------------------------------------------------- */

/* Structural parse only, then a law report (violations are report entries,
 * not errors). */
cocart_status cocart_validate_text(const char* text, cocart_report** out);
cocart_status cocart_validate_file(const char* path, cocart_report** out);

/* condition: "a".."e" or "all". limit = 0 selects the default enumeration
 * bound (10^7 candidate families per search). */
cocart_status cocart_check(const cocart_bundle* b, const char* condition, uint64_t limit,
                           cocart_report** out);

/* Synthesizes coproducts by splitting the canonical idempotents; when
 * karoubi is nonzero the category is completed first. out_bundle receives
 * the emitted bundle (may be the input category unchanged). */
cocart_status cocart_synthesize(const cocart_bundle* b, int karoubi, uint64_t limit,
                                cocart_report** out_report, cocart_bundle** out_bundle);

cocart_status cocart_karoubi(const cocart_bundle* b, cocart_report** out_report,
                             cocart_bundle** out_bundle);

cocart_status cocart_demo_egger(uint32_t size_a, uint32_t size_b, uint32_t probe_bound,
                                uint64_t limit, cocart_report** out);

/* Reports ---------------------------------------------------------------- */

/* machine = 0 renders human-readable text, nonzero renders the structured
 * JSON report. Free the string with cocart_string_free. */
cocart_status cocart_report_render(const cocart_report* r, int machine, char** out_text);

/* Nonzero when an enumeration limit was hit while the command still ran to
 * completion; callers map this to their resource-limit exit path. */
int cocart_report_limit_hit(const cocart_report* r);

void cocart_report_free(cocart_report* r);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* COCART_H */
