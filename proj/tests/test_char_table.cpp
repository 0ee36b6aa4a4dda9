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
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "chartwist/char_table.hpp"
#include "chartwist/error.hpp"

#include <algorithm>
#include <map>

using namespace chartwist;

namespace {

Cyclotomic E(int n, long k = 1) { return Cyclotomic::root_of_unity(n, k); }

ClassFunction ints(std::initializer_list<long> v) {
  ClassFunction out;
  for (long x : v)
    out.emplace_back(x);
  return out;
}

// Tables equal after some permutation of columns (rows compared as sorted
// multisets of row tuples). Brute force over column permutations.
bool equal_up_to_column_permutation(const CharacterTable &a, const CharacterTable &b) {
  const std::size_t r = a.size();
  if (r != b.size())
    return false;
  std::vector<std::size_t> perm(r);
  std::iota(perm.begin(), perm.end(), 0);
  auto key = [](const ClassFunction &row) {
    std::vector<std::string> s;
    for (const auto &x : row)
      s.push_back(x.to_string());
    return s;
  };
  std::vector<std::vector<std::string>> rows_b;
  for (const auto &row : b.irreducibles)
    rows_b.push_back(key(row));
  std::sort(rows_b.begin(), rows_b.end());
  do {
    if (perm[0] != 0)
      continue;
    bool sizes_ok = true;
    for (std::size_t k = 0; k < r; ++k)
      sizes_ok = sizes_ok && a.classes().sizes[k] == b.classes().sizes[perm[k]];
    if (!sizes_ok)
      continue;
    std::vector<std::vector<std::string>> rows_a;
    for (const auto &row : a.irreducibles) {
      ClassFunction p(r);
      for (std::size_t k = 0; k < r; ++k)
        p[perm[k]] = row[k];
      rows_a.push_back(key(p));
    }
    std::sort(rows_a.begin(), rows_a.end());
    if (rows_a == rows_b)
      return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

} // namespace

TEST_CASE("class constants against pair enumeration") {
  for (const char *name : {"S3", "S4", "D8", "Q8", "A4", "C5", "D10"}) {
    CAPTURE(name);
    auto g = named_group(name);
    const auto &cl = g->classes();
    const std::size_t r = cl.size();
    ClassConstants a = class_constants(*g);
    // brute force: every pair (x, y), tally the product's class; divide by |C_k|
    std::map<std::tuple<int, int, int>, std::uint64_t> tally;
    for (int x = 0; x < static_cast<int>(g->order()); ++x)
      for (int y = 0; y < static_cast<int>(g->order()); ++y)
        ++tally[{cl.class_of[x], cl.class_of[y], cl.class_of[g->mul(x, y)]}];
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j) {
        std::uint64_t sum = 0;
        for (std::size_t k = 0; k < r; ++k) {
          auto it = tally.find({int(i), int(j), int(k)});
          std::uint64_t total = it == tally.end() ? 0 : it->second;
          CHECK(a(i, j, k) * cl.sizes[k] == total);
          CHECK(a(i, j, k) == a(j, i, k));
          sum += a(i, j, k) * cl.sizes[k];
        }
        CHECK(sum == cl.sizes[i] * cl.sizes[j]);
        CHECK(a(0, i, j) == (i == j ? 1u : 0u));
      }
  }
  auto c3 = named_group("C3");
  ClassConstants a = class_constants(*c3);
  // identify classes by their element: index of zeta^1 vs zeta^2 is immaterial
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) {
        int x = c3->classes().representatives[i], y = c3->classes().representatives[j];
        int z = c3->classes().representatives[k];
        CHECK(a(i, j, k) == (c3->mul(x, y) == z ? 1u : 0u));
      }
}

TEST_CASE("S4 table") {
  auto t = character_table(named_group("S4"));
  std::vector<ClassFunction> expect = {ints({1, 1, 1, 1, 1}), ints({1, -1, 1, 1, -1}),
                                       ints({2, 0, 2, -1, 0}), ints({3, 1, -1, 0, -1}),
                                       ints({3, -1, -1, 0, 1})};
  CHECK(t.irreducibles == expect);
  CHECK(inner_product(t, t.irreducibles[3], t.irreducibles[3]) == Cyclotomic(1));
  CHECK(inner_product(t, t.irreducibles[3], t.irreducibles[4]) == Cyclotomic(0));
  CHECK(inner_product(t, pointwise(t.irreducibles[3], t.irreducibles[3]), t.irreducibles[2]) ==
        Cyclotomic(1));
}

TEST_CASE("C3 table") {
  auto t = character_table(named_group("C3"));
  std::vector<ClassFunction> expect = {{1, 1, 1}, {1, E(3), E(3, 2)}, {1, E(3, 2), E(3)}};
  CHECK(t.irreducibles == expect);
}

TEST_CASE("A5 has golden-ratio values") {
  auto t = character_table(named_group("A5"));
  Cyclotomic phi = -E(5, 2) - E(5, 3);
  CHECK(phi * phi == phi + 1);
  bool found = false;
  for (const auto &row : t.irreducibles)
    for (const auto &x : row)
      found = found || x == phi;
  CHECK(found);
  std::vector<long> degrees;
  for (std::size_t i = 0; i < t.size(); ++i)
    degrees.push_back(t.degree(i).get_si());
  CHECK(degrees == std::vector<long>{1, 3, 3, 4, 5});
}

TEST_CASE("D8 and Q8 share a table") {
  auto d8 = character_table(named_group("D8"));
  auto q8 = character_table(named_group("Q8"));
  CHECK(equal_up_to_column_permutation(d8, q8));
  for (const auto *t : {&d8, &q8}) {
    std::vector<long> degrees;
    for (std::size_t i = 0; i < t->size(); ++i)
      degrees.push_back(t->degree(i).get_si());
    CHECK(degrees == std::vector<long>{1, 1, 1, 1, 2});
  }
}

TEST_CASE("orthogonality and degree sums across the catalog") {
  for (const char *name : {"C1", "C2", "C7", "C12", "S3", "S4", "S5", "A4", "A5", "D8", "D12",
                           "D14", "Q8", "E2^3", "E2^4", "S6", "A6"}) {
    CAPTURE(name);
    auto g = named_group(name);
    auto t = character_table(g);
    const auto &cl = t.classes();
    const std::size_t r = cl.size();
    REQUIRE(t.size() == r);
    Integer sum = 0;
    for (std::size_t i = 0; i < r; ++i) {
      CHECK(t.degree(i) > 0);
      sum += t.degree(i) * t.degree(i);
    }
    CHECK(sum == static_cast<long>(g->order()));
    for (std::size_t c = 0; c < r; ++c)
      for (std::size_t d = 0; d < r; ++d) {
        Cyclotomic s;
        for (std::size_t i = 0; i < r; ++i)
          s += t.irreducibles[i][c] * t.irreducibles[i][d].conjugate();
        CHECK(s == (c == d ? Cyclotomic(static_cast<long>(g->order() / cl.sizes[c])) : Cyclotomic(0)));
      }
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j)
        CHECK(inner_product(t, t.irreducibles[i], t.irreducibles[j]) == Cyclotomic(i == j ? 1 : 0));
    // the natural permutation character decomposes with nonnegative integer multiplicities
    ClassFunction fix(r);
    for (std::size_t k = 0; k < r; ++k)
      fix[k] = Cyclotomic(static_cast<long>(g->element(cl.representatives[k]).fixed_points()));
    for (std::size_t i = 0; i < r; ++i)
      CHECK(inner_product(t, fix, t.irreducibles[i]).is_nonneg_integer());
    CHECK(inner_product(t, fix, t.irreducibles[0]) != Cyclotomic(0));
  }
}

TEST_CASE("result does not depend on the prime") {
  for (const char *name : {"S4", "D8", "A5", "C12"}) {
    CAPTURE(name);
    auto g = named_group(name);
    auto primes = admissible_primes(*g, 3);
    REQUIRE(primes.size() == 3);
    Config c1, c2;
    c1.prime_override = primes[1];
    c2.prime_override = primes[2];
    auto t0 = character_table(g);
    CHECK(t0.prime == primes[0]);
    CHECK(character_table(g, c1).irreducibles == t0.irreducibles);
    CHECK(character_table(g, c2).irreducibles == t0.irreducibles);
    Config seeded;
    seeded.seed = 12345;
    CHECK(character_table(g, seeded).irreducibles == t0.irreducibles);
  }
  Config bad;
  bad.prime_override = 7;
  CHECK_THROWS_AS(character_table(named_group("S4"), bad), Error);
}

TEST_CASE("json shape") {
  auto j = character_table(named_group("S3")).to_json();
  CHECK(j["classes"].size() == 3);
  CHECK(j["classes"][1]["rep"] == "(2 3)");
  CHECK(j["irreducibles"][1][1]["terms"][0][1] == "-1/1");
}
