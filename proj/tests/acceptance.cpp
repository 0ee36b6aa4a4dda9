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
// Prints one line per acceptance criterion; exits nonzero if any is red.

#include "chartwist/selftest.hpp"

#include <iostream>

int main() {
  const auto config = chartwist::Config::from_environment();
  int failed = 0;
  chartwist::run_selftest(config, [&](const chartwist::CriterionResult &r) {
    std::cout << r.line() << std::endl;
    failed += !r.pass;
  });
  std::cout << (failed ? std::to_string(failed) + " criteria failed" : std::string("all criteria passed")) << "\n";
  return failed ? 1 : 0;
}
