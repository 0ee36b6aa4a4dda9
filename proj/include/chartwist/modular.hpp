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
#ifndef CHARTWIST_MODULAR_HPP
#define CHARTWIST_MODULAR_HPP

// Prime-field arithmetic and the simultaneous eigenspace splitter shared by
// the character table, semiring spectra and twisted group-like searches.

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

namespace chartwist::modp {

using u64 = std::uint64_t;
using Vec = std::vector<u64>;
using Matrix = std::vector<Vec>; // row-major, acts on column vectors

class Field {
public:
  explicit Field(u64 p) : p_(p) {}
  u64 p() const { return p_; }
  u64 add(u64 a, u64 b) const { u64 s = a + b; return s >= p_ ? s - p_ : s; }
  u64 sub(u64 a, u64 b) const { return a >= b ? a - b : a + p_ - b; }
  u64 neg(u64 a) const { return a == 0 ? 0 : p_ - a; }
  u64 mul(u64 a, u64 b) const {
    return static_cast<u64>(static_cast<unsigned __int128>(a) * b % p_);
  }
  u64 pow(u64 a, u64 e) const;
  u64 inv(u64 a) const; // a != 0
  u64 from_integer(const mpz_class &z) const;
  u64 from_signed(long long v) const;

private:
  u64 p_;
};

bool is_prime(u64 n);
/// Smallest prime p > lower_bound with p = 1 (mod modulus).
u64 next_prime_congruent_one(u64 modulus, u64 lower_bound);
/// A primitive n-th root of unity mod p; requires n | p - 1.
u64 primitive_root_of_unity(u64 p, u64 n);

/// Rational number r/s with |r|, s <= sqrt(p/2) congruent to a, if any.
std::optional<mpq_class> rational_reconstruction(u64 a, u64 p);

/// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(Matrix &m, const Field &f);
/// Basis of {x : m x = 0}.
std::vector<Vec> nullspace(Matrix m, std::size_t cols, const Field &f);

/// All roots in F_p of a polynomial (coefficients low degree first).
std::vector<u64> polynomial_roots(Vec poly, const Field &f, std::mt19937_64 &rng);
/// Characteristic polynomial det(xI - a), low degree first.
Vec characteristic_polynomial(Matrix a, const Field &f);

/**
 * Splits F_p^n into common eigenspaces of a commuting family of n x n
 * operators. Returns one spanning vector per common eigenline. Throws
 * NotSemisimple when some operator is not diagonalizable over F_p or a
 * common eigenspace of dimension > 1 cannot be separated by the family.
 */
std::vector<Vec> common_eigenvectors(const std::vector<Matrix> &ops,
                                     const Field &f, u64 seed);

} // namespace chartwist::modp

#endif
