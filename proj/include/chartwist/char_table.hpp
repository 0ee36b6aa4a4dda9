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
#ifndef CHARTWIST_CHAR_TABLE_HPP
#define CHARTWIST_CHAR_TABLE_HPP

#include "chartwist/config.hpp"
#include "chartwist/cyclotomic.hpp"
#include "chartwist/perm_group.hpp"

#include <cstdint>
#include <vector>

namespace chartwist {

/// a(i, j, k) = #{(x, y) : x in C_i, y in C_j, xy = z} for a fixed z in C_k.
class ClassConstants {
public:
  ClassConstants() = default;
  explicit ClassConstants(std::size_t r) : r_(r), a_(r * r * r, 0) {}
  std::size_t size() const { return r_; }
  std::uint64_t operator()(std::size_t i, std::size_t j, std::size_t k) const {
    return a_[(i * r_ + j) * r_ + k];
  }
  std::uint64_t &at(std::size_t i, std::size_t j, std::size_t k) { return a_[(i * r_ + j) * r_ + k]; }

private:
  std::size_t r_ = 0;
  std::vector<std::uint64_t> a_;
};

ClassConstants class_constants(const PermGroup &g);

using ClassFunction = std::vector<Cyclotomic>;

struct CharacterTable {
  GroupPtr group;
  std::vector<ClassFunction> irreducibles; // rows, canonical order
  std::uint64_t prime = 0;                  // prime used by the modular step

  const ConjugacyClasses &classes() const { return group->classes(); }
  std::size_t size() const { return irreducibles.size(); }
  Integer degree(std::size_t chi) const { return irreducibles[chi][0].to_integer(); }

  /// {"classes": [{"order", "size", "rep"}...], "irreducibles": [[...]...]}
  nlohmann::ordered_json to_json() const;
};

/// Primes usable by the modular step: p = 1 mod exponent(G), p^2 > 4|G|,
/// in increasing order.
std::vector<std::uint64_t> admissible_primes(const PermGroup &g, std::size_t count);

/**
 * Dixon-Burnside character table. Rows are ordered by degree, then by value
 * tuples under Cyclotomic::compare in class order. config.prime_override
 * selects a specific admissible prime (InvalidArgument otherwise).
 */
CharacterTable character_table(GroupPtr g, const Config &config = Config{});

/// (1/|G|) sum_C |C| f(C) conj(g(C)).
Cyclotomic inner_product(const CharacterTable &t, const ClassFunction &f, const ClassFunction &g);

/// Pointwise product of class functions.
ClassFunction pointwise(const ClassFunction &f, const ClassFunction &g);

} // namespace chartwist

#endif
