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

#include "chartwist/cyclotomic.hpp"
#include "chartwist/error.hpp"
#include "chartwist/modular.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

using chartwist::Cyclotomic;
using chartwist::ErrorCode;
using chartwist::Rational;

namespace {

// Floating-point evaluation straight from the stored terms; independent of
// the canonicalization logic under test.
std::complex<double> numeric(const Cyclotomic &x) {
  std::complex<double> s = 0;
  for (const auto &[k, c] : x.terms())
    s += c.get_d() * std::polar(1.0, 2 * std::numbers::pi * k / x.conductor());
  return s;
}

Cyclotomic E(int n, long k = 1) { return Cyclotomic::root_of_unity(n, k); }

Cyclotomic random_value(std::mt19937_64 &rng) {
  static const int conductors[] = {1, 3, 4, 5, 7, 8, 9, 12, 15, 20, 24};
  int n = conductors[rng() % std::size(conductors)];
  Cyclotomic x;
  int terms = 1 + static_cast<int>(rng() % 4);
  for (int i = 0; i < terms; ++i) {
    long num = static_cast<long>(rng() % 11) - 5;
    long den = 1 + static_cast<long>(rng() % 3);
    x += Cyclotomic(Rational(num, den)) * E(n, static_cast<long>(rng() % n));
  }
  return x;
}

bool close(std::complex<double> a, std::complex<double> b) { return std::abs(a - b) < 1e-8; }

} // namespace

TEST_CASE("root of unity identities") {
  CHECK(E(3) + E(3, 2) + 1 == Cyclotomic(0));
  CHECK(E(4) * E(4) == Cyclotomic(-1));
  CHECK(E(6) == -E(3, 2));
  CHECK(E(12, 3) == E(4));
  CHECK((E(8) + E(8, 7)) * (E(8) + E(8, 7)) == Cyclotomic(2));
  CHECK(E(5) + E(5, 2) + E(5, 3) + E(5, 4) == Cyclotomic(-1));
  CHECK(E(1) == Cyclotomic(1));
  CHECK(E(2) == Cyclotomic(-1));
}

TEST_CASE("conductor is minimal") {
  CHECK(E(12, 4).conductor() == 3);
  CHECK(E(6).conductor() == 3);
  CHECK((E(8) + E(8, 7)).conductor() == 8);
  CHECK((E(8) * E(8)).conductor() == 4);
  CHECK((E(9, 3) + E(9, 6)).conductor() == 1);
  CHECK((E(15, 5) * E(15, 3)).conductor() == 15);
  // sum of primitive n-th roots equals the Moebius function
  for (auto [n, mu] : std::vector<std::pair<int, int>>{{1, 1}, {2, -1}, {6, 1}, {9, 0}, {10, 1}, {30, -1}, {12, 0}}) {
    Cyclotomic s;
    for (int k = 0; k < n; ++k)
      if (std::gcd(k, n) == 1)
        s += E(n, k);
    CHECK(s == Cyclotomic(mu));
  }
}

TEST_CASE("quadratic Gauss sums") {
  for (int p : {3, 5, 7, 11, 13}) {
    Cyclotomic g;
    for (int k = 1; k < p; ++k) {
      int legendre = 1;
      int r = 1;
      for (int i = 0; i < (p - 1) / 2; ++i)
        r = r * k % p;
      legendre = r == 1 ? 1 : -1;
      g += Cyclotomic(legendre) * E(p, k);
    }
    CHECK(g * g == Cyclotomic(p % 4 == 1 ? p : -p));
    CHECK(g.conductor() == p);
  }
}

TEST_CASE("field axioms on random values") {
  std::mt19937_64 rng(7);
  for (int it = 0; it < 300; ++it) {
    Cyclotomic a = random_value(rng), b = random_value(rng), c = random_value(rng);
    CHECK(close(numeric(a * b), numeric(a) * numeric(b)));
    CHECK(close(numeric(a + b), numeric(a) + numeric(b)));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == Cyclotomic(0));
    CHECK(close(numeric(a.conjugate()), std::conj(numeric(a))));
    if (!a.is_zero()) {
      CHECK(a * a.inverse() == Cyclotomic(1));
      CHECK(close(numeric(a.inverse()), 1.0 / numeric(a)));
    }
    // Galois action is a ring homomorphism
    long k = 1;
    while (std::gcd(k, 2520L) != 1 || k == 1)
      k = 1 + static_cast<long>(rng() % 2519);
    CHECK((a * b).galois(k) == a.galois(k) * b.galois(k));
    // equal values have equal canonical data
    Cyclotomic d = (a + b) * (a - b);
    Cyclotomic e = a * a - b * b;
    CHECK(d == e);
    CHECK(d.hash() == e.hash());
    CHECK(Cyclotomic::from_json(a.to_json()) == a);
  }
}

TEST_CASE("errors") {
  CHECK_THROWS_AS(Cyclotomic(0).inverse(), chartwist::Error);
  try {
    (void)E(4).galois(2);
    FAIL("expected NotCoprime");
  } catch (const chartwist::Error &e) {
    CHECK(e.code() == ErrorCode::NotCoprime);
  }
  try {
    (void)E(3).to_integer();
    FAIL("expected NotAnInteger");
  } catch (const chartwist::Error &e) {
    CHECK(e.code() == ErrorCode::NotAnInteger);
  }
  CHECK(Cyclotomic(Rational(7, 2)).to_rational() == Rational(7, 2));
}

TEST_CASE("printing") {
  CHECK(Cyclotomic(-1).to_string() == "-1");
  CHECK(Cyclotomic(Rational(3, 2)).to_string() == "3/2");
  CHECK(E(3, 2).to_string() == "E(3)^2");
  CHECK(E(3).to_string() == "E(3)");
}

TEST_CASE("presentation order") {
  CHECK(Cyclotomic(1) < Cyclotomic(0));
  CHECK(Cyclotomic(0) < Cyclotomic(-1));
  CHECK(Cyclotomic(-1) < E(3));
  CHECK(E(3) < E(3, 2));
}

TEST_CASE("reduction mod p is a ring map") {
  const std::uint64_t p = 61; // 60 divides p - 1
  const int n = 60;
  std::uint64_t w = chartwist::modp::primitive_root_of_unity(p, n);
  chartwist::modp::Field f(p);
  std::mt19937_64 rng(3);
  for (int it = 0; it < 100; ++it) {
    Cyclotomic a = random_value(rng), b = random_value(rng);
    if (60 % a.conductor() || 60 % b.conductor() || 60 % (a * b).conductor())
      continue;
    bool nice = true;
    for (const auto *x : {&a, &b})
      for (const auto &[k, c] : x->terms())
        if (c.get_den() % p == 0)
          nice = false;
    if (!nice)
      continue;
    CHECK(chartwist::reduce_mod_p(a * b, p, n, w) ==
          f.mul(chartwist::reduce_mod_p(a, p, n, w), chartwist::reduce_mod_p(b, p, n, w)));
    CHECK(chartwist::reduce_mod_p(a + b, p, n, w) ==
          f.add(chartwist::reduce_mod_p(a, p, n, w), chartwist::reduce_mod_p(b, p, n, w)));
  }
}
