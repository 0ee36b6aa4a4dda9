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
#include "chartwist/modular.hpp"

#include "chartwist/error.hpp"

#include <algorithm>
#include <string>

namespace chartwist::modp {

u64 Field::pow(u64 a, u64 e) const {
  u64 r = 1 % p_;
  a %= p_;
  while (e) {
    if (e & 1)
      r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

u64 Field::inv(u64 a) const {
  if (a % p_ == 0)
    throw Error(ErrorCode::DivisionByZero, "modular inverse of zero");
  return pow(a, p_ - 2);
}

u64 Field::from_integer(const mpz_class &z) const {
  static_assert(sizeof(unsigned long) == sizeof(u64), "LP64 expected");
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), z.get_mpz_t(), static_cast<unsigned long>(p_));
  return r.get_ui();
}

u64 Field::from_signed(long long v) const {
  if (v >= 0)
    return static_cast<u64>(v) % p_;
  u64 m = static_cast<u64>(-(v + 1)) % p_; // avoids overflow at LLONG_MIN
  return sub(p_ - 1, m);
}

bool is_prime(u64 n) {
  if (n < 2)
    return false;
  for (u64 q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % q == 0)
      return n == q;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  Field f(n);
  for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    u64 x = f.pow(a, d);
    if (x == 1 || x == n - 1)
      continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = f.mul(x, x);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite)
      return false;
  }
  return true;
}

u64 next_prime_congruent_one(u64 modulus, u64 lower_bound) {
  if (modulus == 0)
    throw Error(ErrorCode::InvalidArgument, "modulus must be positive");
  u64 k = lower_bound / modulus + 1;
  for (u64 tries = 0; tries < 1000000; ++tries, ++k) {
    u64 p = k * modulus + 1;
    if (p > lower_bound && is_prime(p))
      return p;
  }
  throw Error(ErrorCode::NoSplitPrime,
              "no prime = 1 mod " + std::to_string(modulus) +
                  " found within the search bound");
}

u64 primitive_root_of_unity(u64 p, u64 n) {
  if (n == 0 || (p - 1) % n != 0)
    throw Error(ErrorCode::InvalidArgument, "n does not divide p - 1");
  Field f(p);
  std::vector<u64> primes;
  u64 m = n;
  for (u64 q = 2; q * q <= m; ++q) {
    if (m % q == 0) {
      primes.push_back(q);
      while (m % q == 0)
        m /= q;
    }
  }
  if (m > 1)
    primes.push_back(m);
  for (u64 g = 2; g < p; ++g) {
    u64 w = f.pow(g, (p - 1) / n);
    bool ok = true;
    for (u64 q : primes)
      if (f.pow(w, n / q) == 1) {
        ok = false;
        break;
      }
    if (ok)
      return w;
  }
  return 1; // n == 1
}

std::optional<mpq_class> rational_reconstruction(u64 a, u64 p) {
  // Extended Euclid on (p, a), stopping once the remainder drops below the bound.
  const mpz_class pz(static_cast<unsigned long>(p));
  mpz_class bound = sqrt(pz / 2);
  mpz_class r0 = pz, r1(static_cast<unsigned long>(a));
  mpz_class t0 = 0, t1 = 1;
  while (r1 > bound) {
    mpz_class q = r0 / r1;
    mpz_class r2 = r0 - q * r1;
    mpz_class t2 = t0 - q * t1;
    r0 = r1;
    r1 = r2;
    t0 = t1;
    t1 = t2;
  }
  if (t1 == 0 || abs(t1) > bound)
    return std::nullopt;
  mpq_class out(r1, t1);
  out.canonicalize();
  return out;
}

std::vector<std::size_t> rref(Matrix &m, const Field &f) {
  std::vector<std::size_t> pivots;
  if (m.empty())
    return pivots;
  const std::size_t rows = m.size(), cols = m[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && m[piv][c] == 0)
      ++piv;
    if (piv == rows)
      continue;
    std::swap(m[piv], m[r]);
    u64 s = f.inv(m[r][c]);
    for (auto &x : m[r])
      x = f.mul(x, s);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0)
        continue;
      u64 t = m[i][c];
      for (std::size_t j = c; j < cols; ++j)
        m[i][j] = f.sub(m[i][j], f.mul(t, m[r][j]));
    }
    pivots.push_back(c);
    ++r;
  }
  m.resize(r);
  return pivots;
}

std::vector<Vec> nullspace(Matrix m, std::size_t cols, const Field &f) {
  std::vector<std::size_t> pivots = rref(m, f);
  std::vector<char> is_pivot(cols, 0);
  for (auto c : pivots)
    is_pivot[c] = 1;
  std::vector<Vec> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free])
      continue;
    Vec v(cols, 0);
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i)
      v[pivots[i]] = f.neg(m[i][free]);
    basis.push_back(std::move(v));
  }
  return basis;
}

namespace {

void trim(Vec &a) {
  while (!a.empty() && a.back() == 0)
    a.pop_back();
}

Vec poly_mul(const Vec &a, const Vec &b, const Field &f) {
  if (a.empty() || b.empty())
    return {};
  Vec r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      r[i + j] = f.add(r[i + j], f.mul(a[i], b[j]));
  trim(r);
  return r;
}

// a = q*b + r; returns r, writes q when requested.
Vec poly_divmod(Vec a, const Vec &b, const Field &f, Vec *q = nullptr) {
  trim(a);
  if (q)
    q->assign(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, 0);
  u64 lead = f.inv(b.back());
  while (a.size() >= b.size() && !a.empty()) {
    std::size_t shift = a.size() - b.size();
    u64 c = f.mul(a.back(), lead);
    if (q)
      (*q)[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i)
      a[shift + i] = f.sub(a[shift + i], f.mul(c, b[i]));
    trim(a);
  }
  return a;
}

Vec poly_gcd(Vec a, Vec b, const Field &f) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Vec r = poly_divmod(a, b, f);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    u64 s = f.inv(a.back());
    for (auto &x : a)
      x = f.mul(x, s);
  }
  return a;
}

Vec poly_powmod(Vec base, u64 e, const Vec &mod, const Field &f) {
  Vec result{1};
  base = poly_divmod(base, mod, f);
  while (e) {
    if (e & 1)
      result = poly_divmod(poly_mul(result, base, f), mod, f);
    base = poly_divmod(poly_mul(base, base, f), mod, f);
    e >>= 1;
  }
  return result;
}

void split_linear(const Vec &g, const Field &f, std::mt19937_64 &rng,
                  std::vector<u64> &out) {
  if (g.size() <= 1)
    return;
  if (g.size() == 2) {
    out.push_back(f.mul(f.neg(g[0]), f.inv(g[1])));
    return;
  }
  std::uniform_int_distribution<u64> dist(0, f.p() - 1);
  for (;;) {
    u64 a = dist(rng);
    Vec h = poly_powmod(Vec{a, 1}, (f.p() - 1) / 2, g, f);
    if (h.empty())
      h = Vec{0};
    h[0] = f.sub(h[0], 1);
    trim(h);
    Vec d = poly_gcd(g, h, f);
    if (d.size() > 1 && d.size() < g.size()) {
      Vec q;
      poly_divmod(g, d, f, &q);
      split_linear(d, f, rng, out);
      split_linear(q, f, rng, out);
      return;
    }
  }
}

} // namespace

std::vector<u64> polynomial_roots(Vec poly, const Field &f, std::mt19937_64 &rng) {
  trim(poly);
  std::vector<u64> roots;
  if (poly.size() <= 1)
    return roots;
  if (f.p() == 2) {
    for (u64 x = 0; x < 2; ++x) {
      u64 acc = 0;
      for (std::size_t i = poly.size(); i-- > 0;)
        acc = f.add(f.mul(acc, x), poly[i]);
      if (acc == 0)
        roots.push_back(x);
    }
    return roots;
  }
  Vec xp = poly_powmod(Vec{0, 1}, f.p(), poly, f);
  if (xp.size() < 2)
    xp.resize(2, 0);
  xp[1] = f.sub(xp[1], 1);
  trim(xp);
  Vec g = poly_gcd(poly, xp, f);
  if (g.empty()) // poly divides x^p - x
    g = poly_gcd(poly, poly, f);
  split_linear(g, f, rng, roots);
  std::sort(roots.begin(), roots.end());
  return roots;
}

Vec characteristic_polynomial(Matrix a, const Field &f) {
  const std::size_t n = a.size();
  // Reduce to upper Hessenberg form by similarity transforms.
  for (std::size_t j = 0; j + 2 < n; ++j) {
    std::size_t piv = j + 1;
    while (piv < n && a[piv][j] == 0)
      ++piv;
    if (piv == n)
      continue;
    if (piv != j + 1) {
      std::swap(a[piv], a[j + 1]);
      for (std::size_t r = 0; r < n; ++r)
        std::swap(a[r][piv], a[r][j + 1]);
    }
    u64 inv = f.inv(a[j + 1][j]);
    for (std::size_t r = j + 2; r < n; ++r) {
      if (a[r][j] == 0)
        continue;
      u64 t = f.mul(a[r][j], inv);
      for (std::size_t c = 0; c < n; ++c)
        a[r][c] = f.sub(a[r][c], f.mul(t, a[j + 1][c]));
      for (std::size_t c = 0; c < n; ++c)
        a[c][j + 1] = f.add(a[c][j + 1], f.mul(t, a[c][r]));
    }
  }
  std::vector<Vec> p(n + 1);
  p[0] = Vec{1};
  for (std::size_t m = 1; m <= n; ++m) {
    Vec cur(m + 1, 0);
    // (x - h[m-1][m-1]) p[m-1]
    for (std::size_t i = 0; i < p[m - 1].size(); ++i) {
      cur[i + 1] = f.add(cur[i + 1], p[m - 1][i]);
      cur[i] = f.sub(cur[i], f.mul(a[m - 1][m - 1], p[m - 1][i]));
    }
    u64 t = 1;
    for (std::size_t i = 1; i < m; ++i) {
      t = f.mul(t, a[m - i][m - i - 1]);
      u64 c = f.mul(t, a[m - i - 1][m - 1]);
      for (std::size_t k = 0; k < p[m - i - 1].size(); ++k)
        cur[k] = f.sub(cur[k], f.mul(c, p[m - i - 1][k]));
    }
    p[m] = std::move(cur);
  }
  return p[n];
}

namespace {

struct Subspace {
  Matrix basis; // rows, in reduced row echelon form
  std::vector<std::size_t> pivots;
};

Subspace make_subspace(Matrix rows, const Field &f) {
  Subspace s;
  s.pivots = rref(rows, f);
  s.basis = std::move(rows);
  return s;
}

Vec apply(const Matrix &m, const Vec &v, const Field &f) {
  Vec out(m.size(), 0);
  for (std::size_t i = 0; i < m.size(); ++i) {
    u64 acc = 0;
    for (std::size_t j = 0; j < v.size(); ++j)
      if (v[j] && m[i][j])
        acc = f.add(acc, f.mul(m[i][j], v[j]));
    out[i] = acc;
  }
  return out;
}

} // namespace

std::vector<Vec> common_eigenvectors(const std::vector<Matrix> &ops,
                                     const Field &f, u64 seed) {
  std::vector<Vec> result;
  if (ops.empty())
    return result;
  const std::size_t n = ops[0].size();
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<u64> coeff(1, f.p() - 1);

  Matrix id(n, Vec(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    id[i][i] = 1;
  std::vector<Subspace> work{make_subspace(id, f)};

  while (!work.empty()) {
    Subspace w = std::move(work.back());
    work.pop_back();
    const std::size_t k = w.basis.size();
    if (k == 1) {
      result.push_back(w.basis[0]);
      continue;
    }
    bool split = false;
    const std::size_t attempts = ops.size() + 32;
    for (std::size_t attempt = 0; attempt < attempts && !split; ++attempt) {
      Matrix m;
      if (attempt < ops.size()) {
        m = ops[attempt];
      } else {
        m.assign(n, Vec(n, 0));
        for (const auto &op : ops) {
          u64 c = coeff(rng);
          for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
              if (op[i][j])
                m[i][j] = f.add(m[i][j], f.mul(c, op[i][j]));
        }
      }
      // Restriction to w in the coordinates given by the pivot columns.
      Matrix a(k, Vec(k, 0));
      for (std::size_t j = 0; j < k; ++j) {
        Vec img = apply(m, w.basis[j], f);
        for (std::size_t i = 0; i < k; ++i)
          a[i][j] = img[w.pivots[i]];
      }
      bool scalar = true;
      for (std::size_t i = 0; i < k && scalar; ++i)
        for (std::size_t j = 0; j < k && scalar; ++j)
          if ((i == j && a[i][j] != a[0][0]) || (i != j && a[i][j] != 0))
            scalar = false;
      if (scalar)
        continue;
      std::vector<u64> roots = polynomial_roots(characteristic_polynomial(a, f), f, rng);
      std::vector<Subspace> parts;
      std::size_t total = 0;
      for (u64 lambda : roots) {
        Matrix shifted = a;
        for (std::size_t i = 0; i < k; ++i)
          shifted[i][i] = f.sub(shifted[i][i], lambda);
        std::vector<Vec> null = nullspace(shifted, k, f);
        total += null.size();
        Matrix rows;
        for (const auto &c : null) {
          Vec v(n, 0);
          for (std::size_t i = 0; i < k; ++i)
            if (c[i])
              for (std::size_t t = 0; t < n; ++t)
                v[t] = f.add(v[t], f.mul(c[i], w.basis[i][t]));
          rows.push_back(std::move(v));
        }
        parts.push_back(make_subspace(std::move(rows), f));
      }
      if (total != k)
        throw Error(ErrorCode::NotSemisimple,
                    "operator is not diagonalizable over F_" + std::to_string(f.p()));
      for (auto &p : parts)
        work.push_back(std::move(p));
      split = true;
    }
    if (!split)
      throw Error(ErrorCode::NotSemisimple,
                  "common eigenspace of dimension " + std::to_string(k) +
                      " cannot be separated");
  }
  return result;
}

} // namespace chartwist::modp
