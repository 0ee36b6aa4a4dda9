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
#include "chartwist/config.hpp"
#include "chartwist/error.hpp"

#include <cstdlib>
#include <string>

namespace chartwist {

const char *error_code_name(ErrorCode code) {
  switch (code) {
  case ErrorCode::ParseError: return "ParseError";
  case ErrorCode::UnknownName: return "UnknownName";
  case ErrorCode::InvalidArgument: return "InvalidArgument";
  case ErrorCode::OrderCapExceeded: return "OrderCapExceeded";
  case ErrorCode::SearchBudgetExceeded: return "SearchBudgetExceeded";
  case ErrorCode::DivisionByZero: return "DivisionByZero";
  case ErrorCode::NotCoprime: return "NotCoprime";
  case ErrorCode::NotAnInteger: return "NotAnInteger";
  case ErrorCode::NonIntegralFusion: return "NonIntegralFusion";
  case ErrorCode::NoDegreeMap: return "NoDegreeMap";
  case ErrorCode::NotRigid: return "NotRigid";
  case ErrorCode::NotCommutative: return "NotCommutative";
  case ErrorCode::NotSemisimple: return "NotSemisimple";
  case ErrorCode::NotAHomomorphism: return "NotAHomomorphism";
  case ErrorCode::NotAbelian: return "NotAbelian";
  case ErrorCode::NoDualIdentification: return "NoDualIdentification";
  case ErrorCode::NotCocommutative: return "NotCocommutative";
  case ErrorCode::NotClassPreserving: return "NotClassPreserving";
  case ErrorCode::NoSplitPrime: return "NoSplitPrime";
  case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

namespace {

bool read_u64(const char *name, std::uint64_t &out) {
  const char *raw = std::getenv(name);
  if (raw == nullptr || *raw == '\0')
    return false;
  char *end = nullptr;
  unsigned long long v = std::strtoull(raw, &end, 10);
  if (end == raw || *end != '\0')
    throw Error(ErrorCode::InvalidArgument,
                std::string("environment variable ") + name +
                    " is not a non-negative integer");
  out = v;
  return true;
}

} // namespace

Config Config::from_environment(const Config &initial) {
  Config base = initial;
  read_u64("CHARTWIST_ORDER_CAP", base.order_cap);
  read_u64("CHARTWIST_SEARCH_BUDGET", base.search_budget);
  read_u64("CHARTWIST_SEED", base.seed);
  return base;
}

} // namespace chartwist
