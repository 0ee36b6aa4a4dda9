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
#ifndef CHARTWIST_CYCLOTOMIC_HPP
#define CHARTWIST_CYCLOTOMIC_HPP

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace chartwist {

using Integer = mpz_class;
using Rational = mpq_class; // mpq_class keeps itself canonical (gcd 1, den > 0)

/**
 * @brief Exact element of a cyclotomic field Q(zeta_n).
 *
 * Values are stored over the Zumbroich basis of Q(zeta_n) with the smallest
 * possible n, so two values are equal iff their (conductor, terms) agree.
 * Rationals have conductor 1 and a single exponent-0 term; zero has no terms.
 */
class Cyclotomic {
public:
  using Term = std::pair<int, Rational>; // exponent k of zeta_n, coefficient

  Cyclotomic() = default;
  Cyclotomic(long value); // NOLINT(google-explicit-constructor)
  Cyclotomic(const Rational &value); // NOLINT(google-explicit-constructor)

  /// zeta_n^k, any integer k.
  static Cyclotomic root_of_unity(int n, long k = 1);

  /// Builds sum_k coeffs[k] zeta_n^k and canonicalizes.
  static Cyclotomic from_dense(int n, std::vector<Rational> coeffs);

  int conductor() const { return conductor_; }
  const std::vector<Term> &terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_rational() const { return conductor_ == 1; }
  bool is_integer() const;
  bool is_nonneg_integer() const;
  bool is_one() const;

  /// Requires is_rational(); throws NotAnInteger otherwise.
  Rational to_rational() const;
  /// Throws NotAnInteger unless is_integer().
  Integer to_integer() const;

  /// Coefficients over zeta_N, N a multiple of the conductor.
  std::vector<Rational> dense(int n) const;

  Cyclotomic operator-() const;
  Cyclotomic &operator+=(const Cyclotomic &o);
  Cyclotomic &operator-=(const Cyclotomic &o);
  Cyclotomic &operator*=(const Cyclotomic &o);
  Cyclotomic &operator/=(const Cyclotomic &o);

  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic &b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic &b) { return a -= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic &b) { return a *= b; }
  friend Cyclotomic operator/(Cyclotomic a, const Cyclotomic &b) { return a /= b; }

  friend bool operator==(const Cyclotomic &a, const Cyclotomic &b) {
    return a.conductor_ == b.conductor_ && a.terms_ == b.terms_;
  }

  /// Throws DivisionByZero on zero.
  Cyclotomic inverse() const;
  /// Complex conjugation zeta -> zeta^-1.
  Cyclotomic conjugate() const;
  /// zeta_n -> zeta_n^k; throws NotCoprime unless gcd(k, conductor) = 1.
  Cyclotomic galois(long k) const;

  /// Presentation order used for canonical table rows: rationals before
  /// irrationals, smaller conductor first, then the coefficient vector
  /// compared with larger coefficients first (so 1 < 0 < -1 and
  /// zeta_3 < zeta_3^2 in this order).
  static int compare(const Cyclotomic &a, const Cyclotomic &b);
  friend bool operator<(const Cyclotomic &a, const Cyclotomic &b) {
    return compare(a, b) < 0;
  }

  /// GAP-style text: "-1", "3/2", "E(3)^2", "-1/2*E(8)+E(8)^3".
  std::string to_string() const;

  /// {"conductor": n, "terms": [[k, "num/den"], ...]}
  nlohmann::ordered_json to_json() const;
  static Cyclotomic from_json(const nlohmann::json &j);

  std::size_t hash() const;

private:
  void assign_canonical(int n, std::vector<Rational> &coeffs);

  int conductor_ = 1;
  std::vector<Term> terms_;
};

/// Reduction of a cyclotomic value into F_p along zeta_n -> omega, where
/// omega is a primitive n-th root of unity mod p and the conductor divides n.
std::uint64_t reduce_mod_p(const Cyclotomic &x, std::uint64_t p, int n,
                           std::uint64_t omega);

} // namespace chartwist

template <> struct std::hash<chartwist::Cyclotomic> {
  std::size_t operator()(const chartwist::Cyclotomic &c) const noexcept {
    return c.hash();
  }
};

#endif
