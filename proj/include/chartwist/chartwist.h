/* Copyright (C) 2026 The chartwist authors
 * This program is Licensed under the Apache License, Version 2.0
 * (the "License"); you may not use this file except in compliance
 * with the License. You may obtain a copy of the License at
 *   http://www.apache.org/licenses/LICENSE-2.0
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License. See accompanying LICENSE file.
 */
#ifndef CHARTWIST_H
#define CHARTWIST_H

/*
 * C interface to chartwist. Objects are opaque handles released with their
 * *_free function. Every call returns a cw_status; on failure the message
 * is available from cw_last_error() on the same thread until the next call.
 * Strings handed out by the library stay owned by the handle they came from.
 */

#include <stdint.h>

#if defined(_WIN32)
#define CHARTWIST_API __declspec(dllexport)
#elif defined(__GNUC__)
#define CHARTWIST_API __attribute__((visibility("default")))
#else
#define CHARTWIST_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum cw_status {
  CW_OK = 0,
  CW_ERR_PARSE,
  CW_ERR_UNKNOWN_NAME,
  CW_ERR_INVALID_ARGUMENT,
  CW_ERR_ORDER_CAP,
  CW_ERR_SEARCH_BUDGET,
  CW_ERR_DIVISION_BY_ZERO,
  CW_ERR_NOT_COPRIME,
  CW_ERR_NOT_AN_INTEGER,
  CW_ERR_NON_INTEGRAL_FUSION,
  CW_ERR_NO_DEGREE_MAP,
  CW_ERR_NOT_RIGID,
  CW_ERR_NOT_COMMUTATIVE,
  CW_ERR_NOT_SEMISIMPLE,
  CW_ERR_NOT_A_HOMOMORPHISM,
  CW_ERR_NOT_ABELIAN,
  CW_ERR_NO_DUAL_IDENTIFICATION,
  CW_ERR_NOT_COCOMMUTATIVE,
  CW_ERR_NOT_CLASS_PRESERVING,
  CW_ERR_NO_SPLIT_PRIME,
  CW_ERR_INTERNAL,
  CW_ERR_NULL_ARGUMENT,
  CW_ERR_OUT_OF_MEMORY
} cw_status;

typedef enum cw_format { CW_FORMAT_JSON = 0, CW_FORMAT_CSV = 1, CW_FORMAT_PRETTY = 2 } cw_format;

typedef enum cw_setting {
  CW_ORDER_CAP = 0,
  CW_AUT_CAP,
  CW_SEARCH_BUDGET,
  CW_SEED,
  CW_PRIME /* 0 picks the smallest admissible Dixon prime */
} cw_setting;

enum { CW_ISO_ALL = 1, CW_ISO_CHECK_GROUP_INDUCED = 2 };

typedef struct cw_config cw_config;
typedef struct cw_group cw_group;
typedef struct cw_result cw_result;

CHARTWIST_API const char *cw_version(void);
CHARTWIST_API const char *cw_status_name(cw_status status);
CHARTWIST_API const char *cw_last_error(void);
/* 0 ok, 1 mathematical negative, 2 usage, 3 cap or budget exceeded */
CHARTWIST_API int cw_status_exit_code(cw_status status);

/* Defaults, then CHARTWIST_ORDER_CAP, CHARTWIST_SEARCH_BUDGET, CHARTWIST_SEED. */
CHARTWIST_API cw_status cw_config_new(cw_config **out);
CHARTWIST_API cw_status cw_config_set(cw_config *config, cw_setting setting, uint64_t value);
CHARTWIST_API cw_status cw_config_get(const cw_config *config, cw_setting setting, uint64_t *value);
CHARTWIST_API void cw_config_free(cw_config *config);

CHARTWIST_API cw_status cw_group_parse(const cw_config *config, const char *spec, cw_group **out);
CHARTWIST_API cw_status cw_group_order(const cw_group *group, uint64_t *order);
CHARTWIST_API cw_status cw_group_class_count(const cw_group *group, uint64_t *count);
CHARTWIST_API void cw_group_free(cw_group *group);

CHARTWIST_API cw_status cw_table(const cw_config *config, const char *spec, cw_result **out);
CHARTWIST_API cw_status cw_iso(const cw_config *config, const char *spec1, const char *spec2, int flags,
                               cw_result **out);
CHARTWIST_API cw_status cw_semiring_validate(const cw_config *config, const char *json, cw_result **out);
CHARTWIST_API cw_status cw_semiring_spectrum(const cw_config *config, const char *json, cw_result **out);
CHARTWIST_API cw_status cw_semiring_fusion(const cw_config *config, const char *spec, cw_result **out);
/* subgroup: "auto" or an index; cocycle: "symplectic", "heisenberg" or "trivial" */
CHARTWIST_API cw_status cw_twist(const cw_config *config, const char *spec, const char *subgroup,
                                 const char *cocycle, int report, cw_result **out);
CHARTWIST_API cw_status cw_hopf_check(const cw_config *config, const char *spec, cw_result **out);
/* versus may be NULL */
CHARTWIST_API cw_status cw_permchar(const cw_config *config, const char *spec, const char *action,
                                    const char *versus, cw_result **out);

/* Text owned by the result. */
CHARTWIST_API cw_status cw_result_render(const cw_result *result, cw_format format, const char **text);
/* 1 when the computation answered "no" (failed check, empty list). */
CHARTWIST_API int cw_result_negative(const cw_result *result);
CHARTWIST_API void cw_result_free(cw_result *result);

typedef void (*cw_selftest_callback)(void *user, int id, int pass, const char *line);
CHARTWIST_API cw_status cw_selftest(const cw_config *config, cw_selftest_callback callback, void *user,
                                    int *failed);

#ifdef __cplusplus
}
#endif

#endif
