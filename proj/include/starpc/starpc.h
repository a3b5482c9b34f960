/* Copyright 2026 The starpc Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* C interface to the starpc library.
 *
 * All inputs and outputs are JSON text. Functions return a starpc_status;
 * on failure starpc_last_error() holds a message for the calling thread.
 * Strings returned through char** are owned by the caller and released with
 * starpc_string_free().
 */

#ifndef STARPC_STARPC_H_
#define STARPC_STARPC_H_

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define STARPC_API __declspec(dllexport)
#else
#define STARPC_API __attribute__((visibility("default")))
#endif

typedef enum starpc_status {
  STARPC_OK = 0,
  STARPC_E_INVALID_ARGUMENT = 1,
  STARPC_E_OWNER_MISMATCH = 2,
  STARPC_E_DIVISION_BY_ZERO = 3,
  STARPC_E_CHARACTERISTIC_MISMATCH = 4,
  STARPC_E_NO_SOLUTION = 5,
  STARPC_E_AMBIGUOUS_SOLUTION = 6,
  STARPC_E_INVALID_ALPHA = 7,
  STARPC_E_NO_SYSTEMATIC_FORM = 8,
  STARPC_E_CANNOT_SYSTEMATIZE = 9,
  STARPC_E_ENUMERATION_GUARD = 10,
  STARPC_E_CONFIGURATION = 11,
  STARPC_E_INFEASIBLE = 12,
  STARPC_E_CORRUPTED_RESPONSE = 13,
  STARPC_E_INTERNAL = 14,
  STARPC_E_PARSE = 15,
  STARPC_E_IO = 16
} starpc_status;

typedef struct starpc_session starpc_session;
typedef struct starpc_code starpc_code;

STARPC_API const char* starpc_version(void);
/* Stable lowercase name, e.g. "configuration". */
STARPC_API const char* starpc_status_name(starpc_status status);
STARPC_API const char* starpc_last_error(void);
STARPC_API void starpc_string_free(char* s);

/* Sessions. `scheme` may be NULL; otherwise it fills in a missing "scheme"
 * key and must agree with a present one. */
STARPC_API starpc_status starpc_session_create(const char* config_json,
                                               const char* scheme,
                                               starpc_session** out);
STARPC_API starpc_status starpc_session_set_seed(starpc_session* session,
                                                 uint64_t seed);
STARPC_API starpc_status starpc_session_run(starpc_session* session);
STARPC_API starpc_status starpc_session_transcript(
    const starpc_session* session, char** json_out);
STARPC_API starpc_status starpc_session_summary(const starpc_session* session,
                                                char** json_out);
STARPC_API void starpc_session_destroy(starpc_session* session);

/* Decodes a transcript's recorded responses again:
 * {"decoded": [[...], ...], "matches": bool}. */
STARPC_API starpc_status starpc_replay(const char* transcript_json,
                                       char** json_out);

/* Codes, using the wire descriptor format. */
STARPC_API starpc_status starpc_code_from_json(const char* json,
                                               starpc_code** out);
STARPC_API starpc_status starpc_code_star(const starpc_code* a,
                                          const starpc_code* b,
                                          starpc_code** out);
STARPC_API starpc_status starpc_code_star_power(const starpc_code* c, int g,
                                                starpc_code** out);
STARPC_API starpc_status starpc_code_min_distance(const starpc_code* c,
                                                  uint64_t guard,
                                                  size_t* out);
STARPC_API starpc_status starpc_code_to_json(const starpc_code* c,
                                             char** json_out);
STARPC_API void starpc_code_destroy(starpc_code* c);

/* Privacy audit of a session config. Options (all optional):
 *   {"subset": [0, 1]}     one colluding subset, zero-based
 *   {"all_subsets": 2}     every subset of this size (default: T)
 *   "guard", "seed", "expect_leak"
 * The output lists one report per subset and a "pass" flag: every subset
 * private, or with expect_leak, at least one leaking. */
STARPC_API starpc_status starpc_audit(const char* config_json,
                                      const char* options_json,
                                      char** json_out);

/* Rate table. spec: {"p", "M", "N": [lo, hi], "K", "T", "G", "seed"}.
 * `csv` nonzero selects CSV output, otherwise JSON. */
STARPC_API starpc_status starpc_rate_table(const char* spec_json, int csv,
                                           char** out);

/* Storage encoding of a session config's data: one share per server. */
STARPC_API starpc_status starpc_encode(const char* config_json,
                                       char** json_out);

#ifdef __cplusplus
}
#endif

#endif /* STARPC_STARPC_H_ */
