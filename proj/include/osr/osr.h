/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The osrkit authors
 */

/* C interface to the osrkit library.
 *
 * Semirings are opaque handles created from `.osr` text or from a builder
 * spec such as "zmod:6" and released with osr_semiring_free(). Functions
 * return an osr_status; on failure the calling thread's last-error slot
 * holds a message and, for parse errors, a 1-based line and column.
 * Strings returned through `char**` are owned by the caller and released
 * with osr_string_free().
 */

#ifndef OSR_OSR_H
#define OSR_OSR_H

#include <stddef.h>

#if defined(_WIN32)
#  if defined(OSR_BUILDING_LIBRARY)
#    define OSR_API __declspec(dllexport)
#  else
#    define OSR_API __declspec(dllimport)
#  endif
#else
#  define OSR_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct osr_semiring osr_semiring;

typedef enum osr_status {
    OSR_OK = 0,
    OSR_ERR_PARSE = 1,            /* malformed text, duplicate label, missing section */
    OSR_ERR_LABEL = 2,            /* label does not resolve */
    OSR_ERR_AXIOM = 3,            /* an ordered-semiring law fails */
    OSR_ERR_SIZE_LIMIT = 4,
    OSR_ERR_INVALID_ARGUMENT = 5, /* bad builder spec, null pointer, unknown command */
    OSR_ERR_VERIFICATION = 6,     /* a theorem check found a counterexample */
    OSR_ERR_INTERNAL = 7
} osr_status;

typedef enum osr_command {
    OSR_CMD_VALIDATE = 0,
    OSR_CMD_IDEALS = 1,
    OSR_CMD_RADICALS = 2,
    OSR_CMD_PRIMES = 3,
    OSR_CMD_SPEC = 4,
    OSR_CMD_REFLECT = 5,
    OSR_CMD_PT = 6,
    OSR_CMD_CHECK = 7,
    OSR_CMD_DOT_IDL = 8,
    OSR_CMD_DOT_RAD = 9,
    OSR_CMD_DOT_SPEC = 10
} osr_command;

enum {
    OSR_FLAG_JSON = 1u << 0,
    OSR_FLAG_TIMINGS = 1u << 1
};

typedef struct osr_counts {
    size_t elements;
    size_t ideals;
    size_t radicals;
    size_t primes;
    size_t maximal;
} osr_counts;

OSR_API const char* osr_version(void);
OSR_API const char* osr_status_name(osr_status status);

OSR_API const char* osr_last_error_message(void);
/* 0 when the last error carried no source position. */
OSR_API size_t osr_last_error_line(void);
OSR_API size_t osr_last_error_column(void);

OSR_API osr_status osr_semiring_parse(const char* text, size_t length, osr_semiring** out);
OSR_API osr_status osr_semiring_build(const char* builder_spec, osr_semiring** out);
OSR_API void osr_semiring_free(osr_semiring* semiring);

OSR_API size_t osr_semiring_size(const osr_semiring* semiring);
OSR_API const char* osr_semiring_name(const osr_semiring* semiring);
/* Canonical `.osr` text of the semiring. */
OSR_API osr_status osr_semiring_render(const osr_semiring* semiring, char** out);

OSR_API osr_status osr_counts_get(const osr_semiring* semiring, osr_counts* out);

/* Renders a subcommand. For OSR_CMD_CHECK the status is
 * OSR_ERR_VERIFICATION when any verdict fails; *out still holds the report. */
OSR_API osr_status osr_run(const osr_semiring* semiring, osr_command command, unsigned flags, char** out);

OSR_API void osr_string_free(char* s);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* OSR_OSR_H */
