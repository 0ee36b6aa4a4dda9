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

#include "chartwist/error.hpp"
#include "chartwist/table_iso.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

using namespace chartwist;

namespace {

// Every bijection by trying all column permutations.
std::vector<TableBijection> brute_force(const CharacterTable &t1, const CharacterTable &t2) {
  std::vector<TableBijection> out;
  const std::size_t r = t1.size();
  if (t2.size() != r)
    return out;
  std::vector<int> tau(r);
  std::iota(tau.begin(), tau.end(), 0);
  do {
    TableBijection b{std::vector<int>(r, -1), tau};
    std::vector<char> taken(r, 0);
    bool ok = true;
    for (std::size_t chi = 0; chi < r && ok; ++chi) {
      for (std::size_t a = 0; a < r; ++a) {
        if (taken[a])
          continue;
        bool match = true;
        for (std::size_t c = 0; c < r && match; ++c)
          match = t1.irreducibles[a][c] == t2.irreducibles[chi][tau[c]];
        if (match) {
          b.sigma[chi] = static_cast<int>(a);
          taken[a] = 1;
          break;
        }
      }
      ok = b.sigma[chi] >= 0;
    }
    if (ok)
      out.push_back(b);
  } while (std::next_permutation(tau.begin(), tau.end()));
  return out;
}

TableBijection compose(const TableBijection &a, const TableBijection &b) {
  // apply b then a on classes; rows compose the other way
  TableBijection c{std::vector<int>(a.sigma.size()), std::vector<int>(a.tau.size())};
  for (std::size_t i = 0; i < a.tau.size(); ++i)
    c.tau[i] = b.tau[a.tau[i]];
  for (std::size_t i = 0; i < a.sigma.size(); ++i)
    c.sigma[i] = a.sigma[b.sigma[i]];
  return c;
}

// Fano plane: points are nonzero vectors of F_2^3 (bit masks 1..7).
int apply_matrix(const int m[3][3], int v) {
  int out = 0;
  for (int i = 0; i < 3; ++i) {
    int bit = 0;
    for (int j = 0; j < 3; ++j)
      bit ^= m[i][j] & ((v >> j) & 1);
    out |= bit << i;
  }
  return out;
}

Permutation matrix_action(const int m[3][3]) {
  std::vector<int> img(7);
  for (int v = 1; v <= 7; ++v)
    img[v - 1] = apply_matrix(m, v) - 1;
  return Permutation(img);
}

} // namespace

TEST_CASE("S4 has exactly two table automorphisms") {
  auto t = character_table(named_group("S4"));
  auto bij = find_table_isomorphisms(t, t);
  REQUIRE(bij.size() == 2);
  CHECK(bij[0].sigma == std::vector<int>{0, 1, 2, 3, 4});
  CHECK(bij[0].tau == std::vector<int>{0, 1, 2, 3, 4});
  CHECK(bij[1].sigma == std::vector<int>{0, 1, 2, 4, 3});
  CHECK(bij[1].tau == std::vector<int>{0, 4, 2, 3, 1});
  auto g = named_group("S4");
  auto id = is_group_induced(bij[0], *g, *g);
  REQUIRE(id);
  CHECK(g->classes().class_of == [&] {
    std::vector<int> v(24);
    for (int x = 0; x < 24; ++x)
      v[x] = g->classes().class_of[(*id)[x]];
    return v;
  }());
  CHECK(!is_group_induced(bij[1], *g, *g));
}

TEST_CASE("search agrees with brute force") {
  std::vector<std::pair<const char *, const char *>> pairs = {
      {"S3", "S3"}, {"S4", "S4"}, {"D8", "Q8"}, {"Q8", "Q8"}, {"D8", "D8"}, {"A4", "A4"},
      {"C4", "E2^2"}, {"E2^2", "E2^2"}, {"C5", "C5"}, {"A5", "A5"}, {"D10", "D10"}, {"C6", "C6"}, {"S3", "C6"}};
  for (auto [a, b] : pairs) {
    CAPTURE(a);
    CAPTURE(b);
    auto t1 = character_table(named_group(a)), t2 = character_table(named_group(b));
    auto fast = find_table_isomorphisms(t1, t2);
    auto slow = brute_force(t1, t2);
    std::sort(slow.begin(), slow.end(), [](const auto &x, const auto &y) { return x.tau < y.tau; });
    CHECK(fast == slow);
    for (const auto &bj : fast)
      CHECK(is_table_bijection(bj, t1, t2));
  }
  auto d8 = character_table(named_group("D8")), q8 = character_table(named_group("Q8"));
  auto dq = find_table_isomorphisms(d8, q8);
  CHECK(!dq.empty());
  for (const auto &b : dq)
    CHECK(!is_group_induced(b, *d8.group, *q8.group));
  CHECK(find_table_isomorphisms(character_table(named_group("C3")), character_table(named_group("C4"))).empty());
}

TEST_CASE("self-bijections form a group") {
  for (const char *name : {"S4", "D8", "Q8", "A4", "C5", "E2^3", "A5"}) {
    CAPTURE(name);
    auto t = character_table(named_group(name));
    auto bij = find_table_isomorphisms(t, t);
    REQUIRE(!bij.empty());
    CHECK(bij[0].tau == [&] {
      std::vector<int> v(t.size());
      std::iota(v.begin(), v.end(), 0);
      return v;
    }());
    for (const auto &a : bij)
      for (const auto &b : bij)
        CHECK(std::find(bij.begin(), bij.end(), compose(a, b)) != bij.end());
  }
}

TEST_CASE("random relabelings are group-induced") {
  std::mt19937_64 rng(99);
  for (const char *name : {"S3", "S4", "D8", "Q8", "A4", "A5", "D10"}) {
    CAPTURE(name);
    auto g = named_group(name);
    auto t = character_table(g);
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<int> pts(g->degree());
      std::iota(pts.begin(), pts.end(), 0);
      std::shuffle(pts.begin(), pts.end(), rng);
      auto h = relabel(*g, Permutation(pts));
      auto th = character_table(h);
      auto bij = find_table_isomorphisms(t, th);
      REQUIRE(!bij.empty());
      bool induced = false;
      for (const auto &b : bij) {
        auto iso = is_group_induced(b, *g, *h);
        if (!iso)
          continue;
        induced = true;
        for (std::size_t c = 0; c < t.size(); ++c)
          CHECK(h->classes().class_of[(*iso)[g->classes().representatives[c]]] == b.tau[c]);
      }
      CHECK(induced);
    }
  }
}

TEST_CASE("search budget") {
  auto t = character_table(named_group("E2^4"));
  Config tiny;
  tiny.search_budget = 10;
  CHECK_THROWS_AS(find_table_isomorphisms(t, t, tiny), Error);
  // E2^4 table automorphisms: |GL(4,2)| = 20160 column maps fixing the table
  CHECK(find_table_isomorphisms(t, t).size() == 20160);
}

TEST_CASE("class-preserving automorphisms") {
  auto s4 = class_preserving_automorphisms(*named_group("S4"));
  CHECK(s4.automorphisms.size() == 24);
  CHECK(s4.inner.size() == 24);
  CHECK(s4.class_preserving.size() == 24);
  CHECK(s4.outer_class_preserving.empty());

  auto c5 = class_preserving_automorphisms(*named_group("C5"));
  CHECK(c5.automorphisms.size() == 4);
  CHECK(c5.class_preserving == std::vector<std::size_t>{0});

  auto g6 = named_group("S6");
  auto s6 = class_preserving_automorphisms(*g6);
  CHECK(s6.automorphisms.size() == 1440);
  CHECK(s6.inner.size() == 720);
  CHECK(s6.class_preserving.size() == 720);
  CHECK(s6.outer_class_preserving.empty());
  const int t12 = g6->index_of(Permutation::from_cycles("(1 2)", 6)).value();
  for (std::size_t i = 0; i < s6.automorphisms.size(); ++i) {
    bool inner = std::binary_search(s6.inner.begin(), s6.inner.end(), i);
    auto type = g6->element(s6.automorphisms[i][t12]).cycle_type();
    CHECK(type == (inner ? std::vector<int>{1, 1, 1, 1, 2} : std::vector<int>{2, 2, 2}));
  }
}

TEST_CASE("permutation characters") {
  auto g = named_group("S4");
  auto t = character_table(g);
  auto nat = permutation_character(PermutationRepresentation::natural(g));
  CHECK(nat == ClassFunction{4, 2, 0, 1, 0});
  CHECK(decompose(t, nat) == std::vector<Integer>{1, 0, 0, 1, 0});
  auto reg = permutation_character(PermutationRepresentation::regular(g));
  CHECK(reg == ClassFunction{24, 0, 0, 0, 0});
  CHECK(decompose(t, reg) == std::vector<Integer>{1, 1, 2, 3, 3});
  PermutationRepresentation trivial(g, {Permutation::identity(1), Permutation::identity(1)});
  CHECK(decompose(t, permutation_character(trivial)) == std::vector<Integer>{1, 0, 0, 0, 0});
  CHECK_THROWS_AS(PermutationRepresentation(g, {Permutation::from_cycles("(1 2)"), Permutation::identity(2)}),
                  Error);
  auto co = PermutationRepresentation::from_action(g, "cosets:(1 2 3)");
  CHECK(co.degree() == 8);
  for (const auto &m : decompose(t, permutation_character(co)))
    CHECK(m >= 0);
}

TEST_CASE("same permutation character") {
  auto s3 = named_group("S3");
  auto nat = PermutationRepresentation::natural(s3);
  Permutation h = Permutation::from_cycles("(1 3)");
  std::vector<Permutation> conj;
  for (const auto &x : s3->generators())
    conj.push_back(h.inverse() * x * h);
  PermutationRepresentation twisted(s3, conj);
  auto r = same_permutation_character(nat, twisted);
  CHECK(r.ok);
  CHECK(r.message.find("induced maps") != std::string::npos);

  auto c2 = named_group("C2");
  PermutationRepresentation swap(c2, {Permutation::from_cycles("(1 2)")});
  PermutationRepresentation fixed(c2, {Permutation::identity(2)});
  CHECK(permutation_character(swap) == ClassFunction{2, 0});
  CHECK(permutation_character(fixed) == ClassFunction{2, 2});
  CHECK(!same_permutation_character(swap, fixed).ok);
}

TEST_CASE("S5 subgroups of S6 give different permutation characters") {
  // Point stabilizer versus a transitive S5 (the image of a point stabilizer
  // under an outer automorphism). The fixed-point counts of a transposition
  // are 4 and 0, so the coset characters differ.
  auto g = named_group("S6");
  auto cl = class_preserving_automorphisms(*g);
  REQUIRE(!cl.automorphisms.empty());
  std::vector<int> stab;
  for (int x = 0; x < static_cast<int>(g->order()); ++x)
    if (g->element(x)[5] == 5)
      stab.push_back(x);
  std::size_t outer = 0;
  while (std::binary_search(cl.inner.begin(), cl.inner.end(), outer))
    ++outer;
  std::vector<int> other;
  for (int x : stab)
    other.push_back(cl.automorphisms[outer][x]);
  std::sort(other.begin(), other.end());
  CHECK(!are_conjugate(*g, stab, other));
  auto a = PermutationRepresentation::cosets(g, stab), b = PermutationRepresentation::cosets(g, other);
  CHECK(a.degree() == 6);
  CHECK(b.degree() == 6);
  auto r = same_permutation_character(a, b);
  CHECK(!r.ok);
}

TEST_CASE("GL(3,2) on points and lines") {
  const int a[3][3] = {{1, 1, 0}, {0, 1, 0}, {0, 0, 1}};
  const int b[3][3] = {{0, 0, 1}, {1, 0, 1}, {0, 1, 0}}; // companion of x^3 + x + 1
  // inverse transposes act on lines (dual vectors)
  const int ait[3][3] = {{1, 0, 0}, {1, 1, 0}, {0, 0, 1}};
  int bt[3][3], bit[3][3];
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      bt[i][j] = b[j][i];
  // invert bt by search over GL(3,2)
  bool found = false;
  for (int code = 0; code < 512 && !found; ++code) {
    int m[3][3];
    for (int k = 0; k < 9; ++k)
      m[k / 3][k % 3] = (code >> k) & 1;
    bool ok = true;
    for (int v = 1; v <= 7 && ok; ++v)
      ok = apply_matrix(m, apply_matrix(bt, v)) == v;
    if (ok) {
      std::copy(&m[0][0], &m[0][0] + 9, &bit[0][0]);
      found = true;
    }
  }
  REQUIRE(found);
  auto g = make_group({matrix_action(a), matrix_action(b)});
  CHECK(g->order() == 168);
  PermutationRepresentation points = PermutationRepresentation::natural(g);
  PermutationRepresentation lines(g, {matrix_action(ait), matrix_action(bit)});
  CHECK(same_permutation_character(points, lines).ok);
  std::vector<int> ps, ls;
  for (int x = 0; x < 168; ++x) {
    if (points.image(x)[0] == 0)
      ps.push_back(x);
    if (lines.image(x)[0] == 0)
      ls.push_back(x);
  }
  CHECK(ps.size() == 24);
  CHECK(ls.size() == 24);
  CHECK(!are_conjugate(*g, ps, ls));
}
