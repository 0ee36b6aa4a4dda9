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
#ifndef CHARTWIST_SELFTEST_HPP
#define CHARTWIST_SELFTEST_HPP

#include "chartwist/config.hpp"

#include <functional>
#include <string>
#include <vector>

namespace chartwist {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool pass = false;
  std::string detail;
  double seconds = 0;

  /// "[PASS] 1 title (0.01 s): detail"
  std::string line() const;
};

/// Runs the ten acceptance checks in order, reporting each as it finishes.
std::vector<CriterionResult> run_selftest(const Config &config,
                                          const std::function<void(const CriterionResult &)> &on_result = {});

} // namespace chartwist

#endif
