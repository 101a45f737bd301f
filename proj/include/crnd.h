/*
 * Copyright 2026 The crnd Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef CRND_H_
#define CRND_H_

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(CRND_BUILDING_LIBRARY)
#define CRND_API __attribute__((visibility("default")))
#else
#define CRND_API
#endif

/* Status codes double as process exit codes. */
typedef enum crnd_status {
  CRND_OK = 0,
  CRND_INPUT_ERROR = 1,        /* malformed input, parse error, bad range */
  CRND_PRECONDITION_ERROR = 2, /* e.g. graph not normalizable at the point */
  CRND_INTERNAL_ERROR = 3      /* failed certificate or unexpected error */
} crnd_status;

typedef enum crnd_format { CRND_FORMAT_HUMAN = 0, CRND_FORMAT_JSON = 1 } crnd_format;

typedef struct crnd_manifold crnd_manifold;
typedef struct crnd_report crnd_report;

/* Message of the last failed call on this thread ("" if none). */
CRND_API const char* crnd_last_error(void);
/* Frees strings returned through char** out-parameters. */
CRND_API void crnd_string_free(char* s);
CRND_API const char* crnd_version(void);

/* Manifold description files. */
CRND_API crnd_status crnd_manifold_load(const char* path, crnd_manifold** out);
CRND_API crnd_status crnd_manifold_parse(const char* text, crnd_manifold** out);
CRND_API void crnd_manifold_free(crnd_manifold* m);
/* Newline-separated warnings (e.g. dropped terms above order k). */
CRND_API crnd_status crnd_manifold_warnings(const crnd_manifold* m, char** out);

/* Full analysis. `point` ("z1,..,zn,s1,..,sd") may be NULL to use the file's
 * basepoint or the origin; `order` <= 0 keeps the file's k. */
CRND_API crnd_status crnd_analyze(const crnd_manifold* m, const char* point, int order, crnd_report** out);
CRND_API void crnd_report_free(crnd_report* r);
CRND_API crnd_status crnd_report_render(const crnd_report* r, crnd_format format, char** out);
/* Per-order table of r1, r2. */
CRND_API crnd_status crnd_report_profile_table(const crnd_report* r, char** out);
/* Writes the JSON report atomically. */
CRND_API crnd_status crnd_report_write_json(const crnd_report* r, const char* path);
/* Parses a JSON report and renders it again in `format`. */
CRND_API crnd_status crnd_report_reformat(const char* json, crnd_format format, char** out);

CRND_API crnd_status crnd_normalize(const crnd_manifold* m, const char* point, crnd_format format, char** out);

/* `t_grid`: "t1,t2,..."; `points`: "lattice:v1,v2,.." or "z..,s..;z..,s..". */
CRND_API crnd_status crnd_sweep(const crnd_manifold* base, const crnd_manifold* direction, const char* t_grid,
                                const char* points, unsigned workers, crnd_format format, char** out);

CRND_API crnd_status crnd_bounds(int m, int big_n, crnd_format format, char** out);
CRND_API crnd_status crnd_codim(int n, int d, int k, int r, crnd_format format, char** out);

CRND_API crnd_status crnd_trial(int n, int d, int k, int samples, uint64_t seed, unsigned workers,
                                crnd_format format, char** out);

/* Runs the built-in reference suite; *all_passed is set to 0 or 1. */
CRND_API crnd_status crnd_verify_reference(unsigned workers, crnd_format format, char** out, int* all_passed);

/* Writes text to path atomically. */
CRND_API crnd_status crnd_write_file(const char* path, const char* text);

#ifdef __cplusplus
}
#endif

#endif /* CRND_H_ */
