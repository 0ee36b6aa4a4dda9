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
#include "chartwist/twist_lab.hpp"

#include <random>

using namespace chartwist;

namespace {

const std::vector<std::string> kSmall = {"C2", "C3", "C4", "E2^2", "C6", "D6", "D8", "Q8", "E2^3", "A4", "D12", "S4"};

// Product in k[G] from permutation products alone.
Tensor naive_product(const Tensor &a, const Tensor &b) {
  const auto &g = a.group();
  Tensor out(g, 1);
  for (const auto &[x, cx] : a.terms())
    for (const auto &[y, cy] : b.terms())
      out.add({*g->index_of(g->element(int(x)) * g->element(int(y)))}, cx * cy);
  return out;
}

Tensor random_element(GroupPtr g, std::mt19937_64 &rng, int terms) {
  std::uniform_int_distribution<int> pick(0, int(g->order()) - 1), coef(-3, 3);
  Tensor t(g, 1);
  for (int i = 0; i < terms; ++i)
    t.add({pick(rng)}, Cyclotomic(coef(rng)));
  return t;
}

Twist cocycle_twist(GroupPtr g, const TwoCocycle &a) {
  auto subs = matching_subgroups(*g, a.m, a.rank);
  REQUIRE(!subs.empty());
  return twist_from_cocycle(g, a, coordinate_basis(*g, subs.front(), a.m, a.rank));
}

int involutions(const PermGroup &g) {
  int n = 0;
  for (int x = 1; x < int(g.order()); ++x)
    n += g.element_order(x) == 2;
  return n;
}

} // namespace

TEST_CASE("tensor product agrees with permutation products") {
  std::mt19937_64 rng(11);
  for (const char *name : {"S3", "D8", "A4"}) {
    auto g = named_group(name);
    for (int i = 0; i < 20; ++i) {
      Tensor a = random_element(g, rng, 4), b = random_element(g, rng, 4);
      CHECK(a * b == naive_product(a, b));
    }
  }
}

TEST_CASE("tensor inverse") {
  std::mt19937_64 rng(5);
  auto g = named_group("S3");
  int inverted = 0;
  for (int i = 0; i < 20; ++i) {
    Tensor a = random_element(g, rng, 3) + Tensor::one(g, 1).scaled(Cyclotomic(5));
    if (auto inv = a.inverse()) {
      ++inverted;
      CHECK(naive_product(a, *inv) == Tensor::one(g, 1));
    }
  }
  CHECK(inverted > 10);
  // 1 + g with g an involution: (1 + g)(1 - g) = 0
  Tensor zero_divisor = Tensor::one(g, 1) + Tensor::basis(g, {g->generator_indices()[0]});
  if (g->element_order(g->generator_indices()[0]) == 2)
    CHECK(!zero_divisor.inverse());
}

TEST_CASE("Hopf axioms on the catalog") {
  for (const auto &name : kSmall) {
    for (const auto &c : hopf_axioms(named_group(name))) {
      INFO(name << " " << c.name);
      CHECK(c.ok);
    }
  }
}

TEST_CASE("abelian idempotents are orthogonal and complete") {
  for (const char *name : {"C2", "C4", "E2^2", "C6"}) {
    auto g = named_group(name);
    Subgroup all(g->order());
    std::iota(all.begin(), all.end(), 0);
    auto e = abelian_idempotents(g, all);
    REQUIRE(e.size() == g->order());
    Tensor sum(g, 1);
    for (std::size_t i = 0; i < e.size(); ++i) {
      sum = sum + e[i];
      for (std::size_t j = 0; j < e.size(); ++j)
        CHECK(naive_product(e[i], e[j]) == (i == j ? e[i] : Tensor(g, 1)));
    }
    CHECK(sum == Tensor::one(g, 1));
  }
  auto s3 = named_group("S3");
  Subgroup all(6);
  std::iota(all.begin(), all.end(), 0);
  CHECK_THROWS_AS(abelian_idempotents(s3, all), Error);
}

TEST_CASE("cocycle values") {
  auto a = symplectic_cocycle(1);
  REQUIRE(a.size() == 4);
  for (std::size_t s = 0; s < 4; ++s)
    for (std::size_t t = 0; t < 4; ++t) {
      const int beta = int(s & 1) * int((t >> 1) & 1);
      CHECK(a(s, t) == Cyclotomic(beta ? -1 : 1));
    }
  auto h = heisenberg_cocycle(3);
  REQUIRE(h.size() == 9);
  for (std::size_t s = 0; s < 9; ++s)
    for (std::size_t t = 0; t < 9; ++t)
      CHECK(h(s, t) == Cyclotomic::root_of_unity(3, long(s / 3) * long(t % 3)));
  // heisenberg(2) is the transpose of symplectic(1)
  auto h2 = heisenberg_cocycle(2);
  for (std::size_t s = 0; s < 4; ++s)
    for (std::size_t t = 0; t < 4; ++t)
      CHECK(h2(s, t) == a(t, s));
  CHECK_THROWS_AS(heisenberg_cocycle(4), Error);
  CHECK_THROWS_AS(symplectic_cocycle(0), Error);
}

TEST_CASE("cocycle identity and nondegeneracy") {
  for (const auto &a : {symplectic_cocycle(1), symplectic_cocycle(2), heisenberg_cocycle(2), heisenberg_cocycle(3),
                        heisenberg_cocycle(5)}) {
    CHECK(is_cocycle(a).ok);
    CHECK(is_nondegenerate(a).ok);
  }
  CHECK(is_cocycle(trivial_cocycle(2, 2)).ok);
  CHECK(!is_nondegenerate(trivial_cocycle(2, 2)).ok);
  CHECK(!is_nondegenerate(trivial_cocycle(3, 1)).ok);
  // every single-value sign flip off the axes breaks the identity
  auto base = symplectic_cocycle(1);
  for (std::size_t s = 1; s < 4; ++s)
    for (std::size_t t = 1; t < 4; ++t) {
      auto a = base;
      a.values[s * 4 + t] = -a.values[s * 4 + t];
      CHECK(!is_cocycle(a).ok);
    }
}

TEST_CASE("coordinate bases and matching subgroups") {
  auto d8 = named_group("D8");
  CHECK(matching_subgroups(*d8, 2, 2).size() == 2);
  CHECK(matching_subgroups(*named_group("Q8"), 2, 2).empty());
  CHECK(matching_subgroups(*named_group("S4"), 2, 2).size() == 1);
  auto c3c3 = named_group("perm:(1 2 3),(4 5 6)");
  CHECK(matching_subgroups(*c3c3, 3, 2).size() == 1);
  auto c4 = named_group("C4");
  Subgroup all{0, 1, 2, 3};
  CHECK_THROWS_AS(coordinate_basis(*c4, all, 2, 2), Error);
  auto s3 = named_group("S3");
  Subgroup s3all{0, 1, 2, 3, 4, 5};
  try {
    coordinate_basis(*s3, s3all, 2, 2);
    FAIL("expected NotAbelian");
  } catch (const Error &e) {
    CHECK(e.code() == ErrorCode::NotAbelian);
  }
}

TEST_CASE("twists from cocycles satisfy Eq. (3) with trivial associator") {
  struct Case {
    const char *group;
    TwoCocycle cocycle;
  };
  std::vector<Case> cases = {{"E2^2", symplectic_cocycle(1)},
                             {"D8", symplectic_cocycle(1)},
                             {"A4", symplectic_cocycle(1)},
                             {"perm:(1 2 3),(4 5 6)", heisenberg_cocycle(3)}};
  for (const auto &c : cases) {
    INFO(c.group);
    auto g = named_group(c.group);
    auto t = cocycle_twist(g, c.cocycle);
    const Tensor one3 = Tensor::one(g, 3);
    CHECK(t.f * t.f_inv == Tensor::one(g, 2));
    CHECK(check_dual_cocycle(t.f, one3).ok);
    CHECK(associator(t) == one3);
    CHECK(pentagon_check(associator(t)));
    CHECK(!check_symmetric(t.f));
    CHECK(check_cocommutative(t));
  }
}

TEST_CASE("perturbed cocycles break Eq. (3)") {
  auto g = named_group("E2^2");
  auto basis = coordinate_basis(*g, {0, 1, 2, 3}, 2, 2);
  const Tensor one3 = Tensor::one(g, 3);
  auto base = symplectic_cocycle(1);
  for (std::size_t s = 1; s < 4; ++s)
    for (std::size_t t = 1; t < 4; ++t) {
      auto a = base;
      a.values[s * 4 + t] = a.values[s * 4 + t] * Cyclotomic(2);
      auto tw = twist_from_cocycle(g, a, basis);
      CHECK(!check_dual_cocycle(tw.f, one3).ok);
      CHECK(!(associator(tw) == one3));
      CHECK(!check_associative(dual_algebra(tw)).ok);
    }
}

TEST_CASE("gauge transforms of the trivial associator satisfy the pentagon") {
  std::mt19937_64 rng(2026);
  std::uniform_int_distribution<int> coef(-2, 2);
  for (const char *name : {"E2^2", "S3"}) {
    auto g = named_group(name);
    const auto &cls = g->classes();
    std::vector<Tensor> sums;
    for (const auto &members : cls.members) {
      Tensor k(g, 1);
      for (int x : members)
        k.add({x}, Cyclotomic(1));
      sums.push_back(k);
    }
    int tested = 0;
    for (int attempt = 0; attempt < 60 && tested < 20; ++attempt) {
      Tensor c = Tensor::one(g, 2).scaled(Cyclotomic(3));
      for (std::size_t i = 0; i < sums.size(); ++i)
        for (std::size_t j = 0; j < sums.size(); ++j)
          c = c + sums[i].outer(sums[j]).scaled(Cyclotomic(coef(rng)));
      REQUIRE(is_invariant(c));
      if (!c.inverse())
        continue;
      ++tested;
      const Tensor phi = gauge_associator(Tensor::one(g, 3), c);
      CHECK(pentagon_check(phi));
    }
    CHECK(tested == 20);
  }
  // a non-invariant C is rejected
  auto s3 = named_group("S3");
  Tensor bad = Tensor::one(s3, 2) + Tensor::basis(s3, {1, 0});
  CHECK(!is_invariant(bad));
  CHECK_THROWS_AS(gauge_associator(Tensor::one(s3, 3), bad), Error);
}

TEST_CASE("a random associator fails the pentagon") {
  auto g = named_group("C2");
  Tensor phi = Tensor::one(g, 3) + Tensor::basis(g, {1, 0, 0}).scaled(Cyclotomic(2));
  CHECK(!pentagon_check(phi));
}

TEST_CASE("dual algebra R_F") {
  auto g = named_group("D8");
  auto t = cocycle_twist(g, symplectic_cocycle(1));
  auto r = dual_algebra(t);
  CHECK(check_associative(r).ok);
  CHECK(check_unit(r).ok);
  CHECK(check_action(r).ok);
  CHECK(!is_commutative(r));
  // trivial twist gives k(G)
  auto k = dual_algebra(make_twist(Tensor::one(g, 2)));
  CHECK(is_commutative(k));
  CHECK(k.products == function_algebra(g).products);
}

TEST_CASE("group-likes of the trivial twist are the group") {
  for (const auto &name : kSmall) {
    INFO(name);
    auto g = named_group(name);
    auto gl = group_likes(make_twist(Tensor::one(g, 2)));
    REQUIRE(gl.elements.size() == g->order());
    for (std::size_t i = 0; i < g->order(); ++i)
      CHECK(gl.elements[i].terms().size() == 1);
    CHECK(is_isomorphic(*gl.as_group(), *g));
  }
}

TEST_CASE("group-likes of cocycle twists") {
  for (const char *name : {"E2^2", "D8", "A4", "S4"}) {
    INFO(name);
    auto g = named_group(name);
    for (const auto &s : matching_subgroups(*g, 2, 2)) {
      auto t = twist_from_cocycle(g, symplectic_cocycle(1), coordinate_basis(*g, s, 2, 2));
      auto gl = group_likes(t);
      REQUIRE(gl.elements.size() == g->order());
      for (const auto &x : gl.elements)
        CHECK(t.f * coproduct(x) * t.f_inv == x.outer(x));
      auto h = gl.as_group();
      CHECK(involutions(*h) == involutions(*g));
      CHECK(is_isomorphic(*h, *g));
    }
  }
  auto c3c3 = named_group("perm:(1 2 3),(4 5 6)");
  auto gl = group_likes(cocycle_twist(c3c3, heisenberg_cocycle(3)));
  CHECK(identify_group(*gl.as_group()) == std::nullopt);
  CHECK(is_isomorphic(*gl.as_group(), *c3c3));
}

TEST_CASE("D8 symplectic twist: G(F) structure") {
  auto g = named_group("D8");
  auto t = cocycle_twist(g, symplectic_cocycle(1));
  auto h = group_likes(t).as_group();
  CHECK(h->order() == 8);
  CHECK(involutions(*h) == 5);
  CHECK(identify_group(*h) == std::optional<std::string>("D8"));
}

TEST_CASE("identify_group") {
  CHECK(identify_group(*named_group("Q8")) == std::optional<std::string>("Q8"));
  CHECK(identify_group(*named_group("perm:(1 2)(3 4),(1 3)(2 4)")) == std::optional<std::string>("E2^2"));
  CHECK(identify_group(*named_group("S4")) == std::optional<std::string>("S4"));
  CHECK(identify_group(*named_group("A5")) == std::optional<std::string>("A5"));
}

TEST_CASE("Galois checks") {
  for (const auto &name : kSmall) {
    INFO(name);
    auto g = named_group(name);
    auto rep = galois_check(function_algebra(g));
    CHECK(rep.galois());
    CHECK(rep.transitive);
    CHECK(rep.semisimple);
    CHECK(rep.center_dim == g->order());
    auto triv = galois_check(function_algebra_trivial(g));
    CHECK(!triv.galois());
    CHECK(triv.invariant_center_dim == g->order());
  }
  for (const char *name : {"D8", "S4"}) {
    auto g = named_group(name);
    auto t = cocycle_twist(g, symplectic_cocycle(1));
    auto r = dual_algebra(t);
    auto rep = galois_check(r);
    CHECK(rep.galois());
    CHECK(rep.transitive);
    auto gl = group_likes(t);
    r.action = group_likes_action(t, gl);
    CHECK(check_action(r).ok);
    CHECK(galois_check(r).galois());
  }
}

TEST_CASE("cross product k(C3) * C3 is a matrix algebra") {
  auto g = named_group("C3");
  auto r = function_algebra(g);
  auto x = cross_product(r);
  CHECK(x.dim == 9);
  CHECK(check_associative(x).ok);
  CHECK(check_unit(x).ok);
  // center of M_3 is one-dimensional
  FiniteAlgebra with_trivial = x;
  AlgebraAction triv;
  triv.table = {{0}};
  triv.images = {{}};
  for (std::size_t i = 0; i < x.dim; ++i)
    triv.images[0].push_back({{int(i), Cyclotomic(1)}});
  with_trivial.action = triv;
  auto rep = galois_check(with_trivial);
  CHECK(rep.center_dim == 1);
  CHECK(rep.semisimple);
}

TEST_CASE("induced algebras") {
  auto c4 = named_group("C4");
  const int sq = c4->pow(c4->generator_indices()[0], 2);
  Subgroup s{0, sq};
  std::vector<Permutation> perms{c4->element(sq)};
  auto c2 = make_group(perms);
  // ind of k(C2) with translations is k(C4) up to basis: Galois and commutative
  auto ind = induced_algebra(function_algebra(c2), c4, s);
  CHECK(ind.dim == 4);
  CHECK(check_associative(ind).ok);
  CHECK(check_unit(ind).ok);
  CHECK(check_action(ind).ok);
  CHECK(is_commutative(ind));
  auto rep = galois_check(ind);
  CHECK(rep.galois());
  CHECK(rep.transitive);
  // ind of the trivial algebra is k(C4/C2)
  auto coset = induced_algebra(function_algebra_trivial(c2), c4, s);
  CHECK(check_action(coset).ok);
  CHECK(coset.dim == 4);
  CHECK(!galois_check(coset).galois());
}

TEST_CASE("class-preserving automorphisms come from invertible intertwiners") {
  std::mt19937_64 rng(8);
  for (const char *name : {"D8", "S4"}) {
    auto g = named_group(name);
    std::uniform_int_distribution<int> pick(0, int(g->order()) - 1);
    for (int i = 0; i < 10; ++i) {
      const int by = pick(rng);
      auto phi = inner_automorphism(*g, by);
      auto w = class_preserving_twist_witness(g, phi);
      for (int x = 0; x < int(g->order()); ++x)
        CHECK(naive_product(naive_product(w.c, Tensor::basis(g, {x})), w.c_inv) == Tensor::basis(g, {phi[x]}));
      CHECK(w.f_invariant);
      CHECK(check_dual_cocycle(w.f, Tensor::one(g, 3)).ok);
    }
  }
  auto c3 = named_group("C3");
  GroupMap inversion{0, 2, 1};
  for (int x = 0; x < 3; ++x)
    inversion[x] = c3->inv(x);
  try {
    class_preserving_twist_witness(c3, inversion);
    FAIL("expected NotClassPreserving");
  } catch (const Error &e) {
    CHECK(e.code() == ErrorCode::NotClassPreserving);
  }
}

TEST_CASE("gauges compose") {
  auto g = named_group("E2^2");
  std::mt19937_64 rng(77);
  std::uniform_int_distribution<int> pick(0, 3), coef(1, 3);
  auto random_c = [&] {
    Tensor c = Tensor::one(g, 2).scaled(Cyclotomic(10)); // dominates the rest, so invertible
    for (int i = 0; i < 3; ++i)
      c.add({pick(rng), pick(rng)}, Cyclotomic(coef(rng)));
    return c;
  };
  const Tensor one3 = Tensor::one(g, 3);
  for (int trial = 0; trial < 5; ++trial) {
    Tensor c0 = random_c(), c1 = random_c(), c2 = random_c();
    REQUIRE(c0.inverse());
    REQUIRE(c1.inverse());
    REQUIRE(c2.inverse());
    const Tensor phi = gauge_associator(one3, c0);
    CHECK(gauge_associator(gauge_associator(phi, c1), c2) == gauge_associator(phi, c1 * c2));
    CHECK(gauge_associator(phi, Tensor::one(g, 2)) == phi);
  }
}
