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
#ifndef CHARTWIST_ERROR_HPP
#define CHARTWIST_ERROR_HPP

#include <stdexcept>
#include <string>

namespace chartwist {

enum class ErrorCode {
  ParseError,
  UnknownName,
  InvalidArgument,
  OrderCapExceeded,
  SearchBudgetExceeded,
  DivisionByZero,
  NotCoprime,
  NotAnInteger,
  NonIntegralFusion,
  NoDegreeMap,
  NotRigid,
  NotCommutative,
  NotSemisimple,
  NotAHomomorphism,
  NotAbelian,
  NoDualIdentification,
  NotCocommutative,
  NotClassPreserving,
  NoSplitPrime,
  Internal,
};

const char *error_code_name(ErrorCode code);

class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string &what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const { return code_; }

private:
  ErrorCode code_;
};

} // namespace chartwist

#endif
