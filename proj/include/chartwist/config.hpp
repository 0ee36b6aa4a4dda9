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
#ifndef CHARTWIST_CONFIG_HPP
#define CHARTWIST_CONFIG_HPP

#include <cstdint>

namespace chartwist {

// Every cap and budget in the library lives here so the CLI and the C API
// can override them from a single place.
struct Config {
  std::uint64_t order_cap = 20000;      // element enumeration
  std::uint64_t aut_cap = 720;          // automorphism / subgroup searches
  std::uint64_t search_budget = 10000000; // table isomorphism nodes
  std::uint64_t seed = 0x5eed;          // randomized splitting and searches
  std::uint64_t prime_override = 0;     // 0 = pick the smallest Dixon prime

  // Reads CHARTWIST_ORDER_CAP, CHARTWIST_SEARCH_BUDGET, CHARTWIST_SEED.
  static Config from_environment(const Config &base);
  static Config from_environment() { return from_environment(Config()); }
};

} // namespace chartwist

#endif
