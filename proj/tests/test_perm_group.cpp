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
#include "chartwist/perm_group.hpp"

#include <map>
#include <set>

using namespace chartwist;

namespace {

// Partition counts give the class numbers of S_n.
int partitions(int n) {
  std::vector<int> p(n + 1, 0);
  p[0] = 1;
  for (int k = 1; k <= n; ++k)
    for (int m = k; m <= n; ++m)
      p[m] += p[m - k];
  return p[n];
}

// Brute-force conjugacy classes: orbits under conjugation by every element.
std::set<std::set<int>> brute_classes(const PermGroup &g) {
  std::set<std::set<int>> out;
  for (int x = 0; x < static_cast<int>(g.order()); ++x) {
    std::set<int> c;
    for (int y = 0; y < static_cast<int>(g.order()); ++y)
      c.insert(g.index_of(g.element(y).inverse() * g.element(x) * g.element(y)).value());
    out.insert(c);
  }
  return out;
}

ErrorCode code_of(auto &&f) {
  try {
    f();
  } catch (const Error &e) {
    return e.code();
  }
  return ErrorCode::Internal;
}

} // namespace

TEST_CASE("permutation basics") {
  auto a = Permutation::from_cycles("(1 2 3)");
  auto b = Permutation::from_cycles("(1 2)");
  // left-to-right composition: 1 -a-> 2 -b-> 1
  CHECK((a * b)[0] == 0);
  CHECK((a * b).to_cycle_string() == "(2 3)");
  CHECK(a.order() == 3);
  CHECK(a.pow(3).is_identity());
  CHECK(a.inverse().to_cycle_string() == "(1 3 2)");
  CHECK(Permutation::from_cycles("()").is_identity());
  CHECK(Permutation::from_cycles("(1 2)(3 4 5)").cycle_type() == std::vector<int>{2, 3});
  CHECK(code_of([] { (void)Permutation::from_cycles("(1 2"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { (void)Permutation::from_cycles("(1 1)"); }) == ErrorCode::ParseError);
}

TEST_CASE("catalog orders and classes") {
  std::map<std::string, std::pair<std::size_t, std::size_t>> expect = {
      {"S3", {6, 3}},  {"S4", {24, 5}}, {"S5", {120, 7}}, {"A4", {24 / 2, 4}},
      {"A5", {60, 5}}, {"C5", {5, 5}},  {"D8", {8, 5}},   {"D10", {10, 4}},
      {"Q8", {8, 5}},  {"E2^3", {8, 8}}, {"D4", {4, 4}},  {"S6", {720, 11}}};
  for (const auto &[name, oc] : expect) {
    CAPTURE(name);
    auto g = named_group(name);
    CHECK(g->order() == oc.first);
    CHECK(g->classes().size() == oc.second);
    CHECK(g->element(0).is_identity());
    if (g->order() <= 120) {
      auto brute = brute_classes(*g);
      std::set<std::set<int>> ours;
      for (const auto &m : g->classes().members)
        ours.insert(std::set<int>(m.begin(), m.end()));
      CHECK(brute == ours);
    }
  }
  for (int n = 1; n <= 6; ++n)
    CHECK(named_group("S" + std::to_string(n))->classes().size() ==
          static_cast<std::size_t>(partitions(n)));
}

TEST_CASE("class ordering and power maps") {
  auto g = named_group("S4");
  const auto &c = g->classes();
  CHECK(c.element_orders.front() == 1);
  for (std::size_t i = 1; i < c.size(); ++i)
    CHECK(c.element_orders[i - 1] <= c.element_orders[i]);
  CHECK(c.names() == std::vector<std::string>{"1", "2A", "2B", "3A", "4A"});
  for (std::size_t i = 0; i < c.size(); ++i) {
    int r = c.representatives[i];
    for (std::size_t k = 0; k < c.power_maps.size(); ++k)
      CHECK(c.power_maps[k][i] == c.class_of[g->pow(r, static_cast<long>(k))]);
    CHECK(c.inverse_class[i] == c.class_of[g->inv(r)]);
  }
}

TEST_CASE("spec parsing") {
  auto g = named_group("perm:(1 2)(3 4),(1 3)(2 4)");
  CHECK(g->order() == 4);
  CHECK(code_of([] { (void)named_group("perm:(1 2)x"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { (void)named_group("Z7"); }) == ErrorCode::UnknownName);
  CHECK(code_of([] { (void)named_group("D7"); }) == ErrorCode::UnknownName);
  CHECK(code_of([] { (void)named_group("S9", 1000); }) == ErrorCode::OrderCapExceeded);
  try {
    (void)named_group("perm:(1 2),(3 a)");
  } catch (const Error &e) {
    CHECK(std::string(e.what()).find("position 14") != std::string::npos);
  }
}

TEST_CASE("automorphism group orders") {
  std::map<std::string, std::size_t> expect = {{"S3", 6},  {"C5", 4},   {"D8", 8},  {"Q8", 24},
                                               {"A4", 24}, {"S4", 24},  {"E2^3", 168},
                                               {"C6", 2},  {"D4", 6}};
  for (const auto &[name, n] : expect) {
    CAPTURE(name);
    auto g = named_group(name);
    auto auts = automorphisms(*g);
    CHECK(auts.size() == n);
    // identity first, every map a bijective homomorphism
    for (int x = 0; x < static_cast<int>(g->order()); ++x)
      CHECK(auts.front()[x] == x);
    for (const auto &m : auts)
      for (int x = 0; x < static_cast<int>(g->order()); ++x)
        for (int y = 0; y < static_cast<int>(g->order()); ++y)
          REQUIRE(m[g->mul(x, y)] == g->mul(m[x], m[y]));
  }
  CHECK(automorphisms(*named_group("S6")).size() == 1440);
  CHECK(code_of([] { (void)automorphisms(*named_group("S6"), 100); }) ==
        ErrorCode::OrderCapExceeded);
}

TEST_CASE("isomorphism search") {
  auto d8 = named_group("D8"), q8 = named_group("Q8");
  CHECK(!is_isomorphic(*d8, *q8));
  auto s3 = named_group("S3");
  auto s3b = named_group("perm:(1 4),(1 4 5)");
  auto iso = is_isomorphic(*s3, *s3b);
  REQUIRE(iso);
  for (int x = 0; x < 6; ++x)
    for (int y = 0; y < 6; ++y)
      CHECK((*iso)[s3->mul(x, y)] == s3b->mul((*iso)[x], (*iso)[y]));
  CHECK(is_isomorphic(*named_group("C6"), *named_group("perm:(1 2),(3 4 5)")));
  CHECK(!is_isomorphic(*named_group("C4"), *named_group("D4")));
}

TEST_CASE("subgroups") {
  CHECK(normal_abelian_subgroups(*named_group("D8")).size() == 5);
  CHECK(normal_abelian_subgroups(*named_group("Q8")).size() == 5);
  CHECK(normal_abelian_subgroups(*named_group("S4")).size() == 2);
  CHECK(normal_abelian_subgroups(*named_group("A5")).size() == 1);
  CHECK(normal_abelian_subgroups(*named_group("E2^3")).size() == 16);
  auto s4 = named_group("S4");
  auto h = subgroup_closure(*s4, {s4->index_of(Permutation::from_cycles("(1 2 3)")).value()});
  CHECK(h.size() == 3);
  CHECK(!is_normal(*s4, h));
  auto act = coset_action(*s4, h);
  CHECK(make_group(act)->order() == 24);
  CHECK(act.front().degree() == 8);
  auto h2 = subgroup_closure(*s4, {s4->index_of(Permutation::from_cycles("(2 3 4)")).value()});
  CHECK(are_conjugate(*s4, h, h2));
}

TEST_CASE("group from table and relabel") {
  auto g = named_group("D8");
  std::vector<std::vector<int>> t(8, std::vector<int>(8));
  for (int x = 0; x < 8; ++x)
    for (int y = 0; y < 8; ++y)
      t[x][y] = g->mul(x, y);
  auto r = group_from_table(t, 0);
  CHECK(r->order() == 8);
  CHECK(is_isomorphic(*g, *r));
  auto rl = relabel(*g, Permutation::from_cycles("(1 3 2)"));
  CHECK(rl->order() == 8);
  CHECK(is_isomorphic(*g, *rl));
}
