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
#include "chartwist/chartwist.h"

#include "chartwist/commands.hpp"
#include "chartwist/selftest.hpp"

#include <array>
#include <new>
#include <string>

struct cw_config {
  chartwist::Config value;
};

struct cw_group {
  chartwist::GroupPtr value;
};

struct cw_result {
  chartwist::CommandResult value;
  mutable std::array<std::string, 3> rendered;
  mutable std::array<bool, 3> ready{};
};

namespace {

thread_local std::string last_error;

cw_status status_for(chartwist::ErrorCode code) {
  using chartwist::ErrorCode;
  switch (code) {
  case ErrorCode::ParseError: return CW_ERR_PARSE;
  case ErrorCode::UnknownName: return CW_ERR_UNKNOWN_NAME;
  case ErrorCode::InvalidArgument: return CW_ERR_INVALID_ARGUMENT;
  case ErrorCode::OrderCapExceeded: return CW_ERR_ORDER_CAP;
  case ErrorCode::SearchBudgetExceeded: return CW_ERR_SEARCH_BUDGET;
  case ErrorCode::DivisionByZero: return CW_ERR_DIVISION_BY_ZERO;
  case ErrorCode::NotCoprime: return CW_ERR_NOT_COPRIME;
  case ErrorCode::NotAnInteger: return CW_ERR_NOT_AN_INTEGER;
  case ErrorCode::NonIntegralFusion: return CW_ERR_NON_INTEGRAL_FUSION;
  case ErrorCode::NoDegreeMap: return CW_ERR_NO_DEGREE_MAP;
  case ErrorCode::NotRigid: return CW_ERR_NOT_RIGID;
  case ErrorCode::NotCommutative: return CW_ERR_NOT_COMMUTATIVE;
  case ErrorCode::NotSemisimple: return CW_ERR_NOT_SEMISIMPLE;
  case ErrorCode::NotAHomomorphism: return CW_ERR_NOT_A_HOMOMORPHISM;
  case ErrorCode::NotAbelian: return CW_ERR_NOT_ABELIAN;
  case ErrorCode::NoDualIdentification: return CW_ERR_NO_DUAL_IDENTIFICATION;
  case ErrorCode::NotCocommutative: return CW_ERR_NOT_COCOMMUTATIVE;
  case ErrorCode::NotClassPreserving: return CW_ERR_NOT_CLASS_PRESERVING;
  case ErrorCode::NoSplitPrime: return CW_ERR_NO_SPLIT_PRIME;
  case ErrorCode::Internal: return CW_ERR_INTERNAL;
  }
  return CW_ERR_INTERNAL;
}

template <class F> cw_status guarded(F &&body) {
  last_error.clear();
  try {
    body();
    return CW_OK;
  } catch (const chartwist::Error &e) {
    last_error = e.what();
    return status_for(e.code());
  } catch (const std::bad_alloc &) {
    last_error = "out of memory";
    return CW_ERR_OUT_OF_MEMORY;
  } catch (const std::exception &e) {
    last_error = e.what();
    return CW_ERR_INTERNAL;
  }
}

cw_status null_argument(const char *what) {
  last_error = std::string(what) + " is NULL";
  return CW_ERR_NULL_ARGUMENT;
}

chartwist::Config config_of(const cw_config *c) {
  return c ? c->value : chartwist::Config::from_environment();
}

template <class F> cw_status produce(cw_result **out, F &&make) {
  if (!out)
    return null_argument("out");
  *out = nullptr;
  return guarded([&] { *out = new cw_result{make(), {}, {}}; });
}

} // namespace

extern "C" {

const char *cw_version(void) { return "1.0.0"; }

const char *cw_status_name(cw_status status) {
  static const char *const names[] = {"ok",
                                      "parse error",
                                      "unknown name",
                                      "invalid argument",
                                      "order cap exceeded",
                                      "search budget exceeded",
                                      "division by zero",
                                      "not coprime",
                                      "not an integer",
                                      "non-integral fusion",
                                      "no degree map",
                                      "not rigid",
                                      "not commutative",
                                      "not semisimple",
                                      "not a homomorphism",
                                      "not abelian",
                                      "no dual identification",
                                      "not cocommutative",
                                      "not class-preserving",
                                      "no split prime",
                                      "internal error",
                                      "null argument",
                                      "out of memory"};
  const auto i = static_cast<std::size_t>(status);
  return i < sizeof(names) / sizeof(names[0]) ? names[i] : "unknown status";
}

const char *cw_last_error(void) { return last_error.c_str(); }

int cw_status_exit_code(cw_status status) {
  switch (status) {
  case CW_OK: return 0;
  case CW_ERR_PARSE:
  case CW_ERR_UNKNOWN_NAME:
  case CW_ERR_INVALID_ARGUMENT:
  case CW_ERR_NULL_ARGUMENT: return 2;
  case CW_ERR_ORDER_CAP:
  case CW_ERR_SEARCH_BUDGET: return 3;
  default: return 1;
  }
}

cw_status cw_config_new(cw_config **out) {
  if (!out)
    return null_argument("out");
  *out = nullptr;
  return guarded([&] { *out = new cw_config{chartwist::Config::from_environment()}; });
}

cw_status cw_config_set(cw_config *config, cw_setting setting, uint64_t value) {
  if (!config)
    return null_argument("config");
  auto &c = config->value;
  switch (setting) {
  case CW_ORDER_CAP: c.order_cap = value; break;
  case CW_AUT_CAP: c.aut_cap = value; break;
  case CW_SEARCH_BUDGET: c.search_budget = value; break;
  case CW_SEED: c.seed = value; break;
  case CW_PRIME: c.prime_override = value; break;
  default:
    last_error = "unknown setting";
    return CW_ERR_INVALID_ARGUMENT;
  }
  return CW_OK;
}

cw_status cw_config_get(const cw_config *config, cw_setting setting, uint64_t *value) {
  if (!config)
    return null_argument("config");
  if (!value)
    return null_argument("value");
  const auto &c = config->value;
  switch (setting) {
  case CW_ORDER_CAP: *value = c.order_cap; break;
  case CW_AUT_CAP: *value = c.aut_cap; break;
  case CW_SEARCH_BUDGET: *value = c.search_budget; break;
  case CW_SEED: *value = c.seed; break;
  case CW_PRIME: *value = c.prime_override; break;
  default:
    last_error = "unknown setting";
    return CW_ERR_INVALID_ARGUMENT;
  }
  return CW_OK;
}

void cw_config_free(cw_config *config) { delete config; }

cw_status cw_group_parse(const cw_config *config, const char *spec, cw_group **out) {
  if (!spec)
    return null_argument("spec");
  if (!out)
    return null_argument("out");
  *out = nullptr;
  return guarded([&] { *out = new cw_group{chartwist::named_group(spec, config_of(config).order_cap)}; });
}

cw_status cw_group_order(const cw_group *group, uint64_t *order) {
  if (!group)
    return null_argument("group");
  if (!order)
    return null_argument("order");
  *order = group->value->order();
  return CW_OK;
}

cw_status cw_group_class_count(const cw_group *group, uint64_t *count) {
  if (!group)
    return null_argument("group");
  if (!count)
    return null_argument("count");
  *count = group->value->classes().size();
  return CW_OK;
}

void cw_group_free(cw_group *group) { delete group; }

cw_status cw_table(const cw_config *config, const char *spec, cw_result **out) {
  if (!spec)
    return null_argument("spec");
  return produce(out, [&] { return chartwist::table_command(spec, config_of(config)); });
}

cw_status cw_iso(const cw_config *config, const char *spec1, const char *spec2, int flags, cw_result **out) {
  if (!spec1 || !spec2)
    return null_argument("spec");
  chartwist::IsoOptions options{(flags & CW_ISO_ALL) != 0, (flags & CW_ISO_CHECK_GROUP_INDUCED) != 0};
  return produce(out, [&] { return chartwist::iso_command(spec1, spec2, options, config_of(config)); });
}

cw_status cw_semiring_validate(const cw_config *config, const char *json, cw_result **out) {
  if (!json)
    return null_argument("json");
  return produce(out, [&] { return chartwist::semiring_validate_command(json, config_of(config)); });
}

cw_status cw_semiring_spectrum(const cw_config *config, const char *json, cw_result **out) {
  if (!json)
    return null_argument("json");
  return produce(out, [&] { return chartwist::semiring_spectrum_command(json, config_of(config)); });
}

cw_status cw_semiring_fusion(const cw_config *config, const char *spec, cw_result **out) {
  if (!spec)
    return null_argument("spec");
  return produce(out, [&] { return chartwist::semiring_fusion_command(spec, config_of(config)); });
}

cw_status cw_twist(const cw_config *config, const char *spec, const char *subgroup, const char *cocycle, int report,
                   cw_result **out) {
  if (!spec)
    return null_argument("spec");
  chartwist::TwistOptions options;
  if (subgroup)
    options.subgroup = subgroup;
  if (cocycle)
    options.cocycle = cocycle;
  options.report = report != 0;
  return produce(out, [&] { return chartwist::twist_command(spec, options, config_of(config)); });
}

cw_status cw_hopf_check(const cw_config *config, const char *spec, cw_result **out) {
  if (!spec)
    return null_argument("spec");
  return produce(out, [&] { return chartwist::hopf_command(spec, config_of(config)); });
}

cw_status cw_permchar(const cw_config *config, const char *spec, const char *action, const char *versus,
                      cw_result **out) {
  if (!spec)
    return null_argument("spec");
  if (!action)
    return null_argument("action");
  std::optional<std::string> other;
  if (versus)
    other = versus;
  return produce(out, [&] { return chartwist::permchar_command(spec, action, other, config_of(config)); });
}

cw_status cw_result_render(const cw_result *result, cw_format format, const char **text) {
  if (!result)
    return null_argument("result");
  if (!text)
    return null_argument("text");
  const auto i = static_cast<std::size_t>(format);
  if (i > 2) {
    last_error = "unknown format";
    return CW_ERR_INVALID_ARGUMENT;
  }
  return guarded([&] {
    if (!result->ready[i]) {
      result->rendered[i] = result->value.render(static_cast<chartwist::Format>(i));
      result->ready[i] = true;
    }
    *text = result->rendered[i].c_str();
  });
}

int cw_result_negative(const cw_result *result) { return result && result->value.negative ? 1 : 0; }

void cw_result_free(cw_result *result) { delete result; }

cw_status cw_selftest(const cw_config *config, cw_selftest_callback callback, void *user, int *failed) {
  return guarded([&] {
    int red = 0;
    chartwist::run_selftest(config_of(config), [&](const chartwist::CriterionResult &r) {
      red += !r.pass;
      if (callback)
        callback(user, r.id, r.pass ? 1 : 0, r.line().c_str());
    });
    if (failed)
      *failed = red;
  });
}

} // extern "C"
