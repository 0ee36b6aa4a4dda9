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
#include "chartwist/char_table.hpp"

#include "chartwist/error.hpp"
#include "chartwist/modular.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace chartwist {

ClassConstants class_constants(const PermGroup &g) {
  const auto &cl = g.classes();
  const std::size_t r = cl.size();
  ClassConstants a(r);
  for (std::size_t k = 0; k < r; ++k) {
    const int z = cl.representatives[k];
    for (std::size_t i = 0; i < r; ++i)
      for (int x : cl.members[i])
        ++a.at(i, cl.class_of[g.mul(g.inv(x), z)], k);
  }
  return a;
}

std::vector<std::uint64_t> admissible_primes(const PermGroup &g, std::size_t count) {
  std::vector<std::uint64_t> out;
  // p > 2 sqrt(|G|)  <=>  p^2 > 4|G|
  std::uint64_t bound = static_cast<std::uint64_t>(2 * std::sqrt(static_cast<double>(g.order())));
  while (bound * bound <= 4 * g.order())
    ++bound;
  std::uint64_t lower = bound - 1;
  for (std::size_t tries = 0; out.size() < count; ++tries) {
    if (tries > 1000000)
      throw Error(ErrorCode::NoSplitPrime, "no admissible prime found in the search window");
    std::uint64_t p = modp::next_prime_congruent_one(g.exponent(), lower);
    out.push_back(p);
    lower = p;
  }
  return out;
}

namespace {

using modp::u64;

bool is_admissible(const PermGroup &g, u64 p) {
  return modp::is_prime(p) && (p - 1) % g.exponent() == 0 &&
         static_cast<unsigned __int128>(p) * p > 4 * static_cast<unsigned __int128>(g.order());
}

// Values of one irreducible character mod p from a central-character
// eigenvector w (normalized so w[identity class] = 1).
std::vector<u64> character_mod_p(const PermGroup &g, const modp::Field &f, const modp::Vec &w) {
  const auto &cl = g.classes();
  const std::size_t r = cl.size();
  u64 norm = 0;
  for (std::size_t k = 0; k < r; ++k)
    norm = f.add(norm, f.mul(f.mul(w[k], w[cl.inverse_class[k]]), f.inv(cl.sizes[k] % f.p())));
  if (norm == 0)
    throw Error(ErrorCode::Internal, "degenerate central character");
  const u64 d2 = f.mul(g.order() % f.p(), f.inv(norm));
  u64 d = 0;
  for (u64 c = 1; c * c <= g.order(); ++c)
    if (f.mul(c, c) == d2) {
      d = c;
      break;
    }
  if (d == 0)
    throw Error(ErrorCode::Internal, "character degree not recovered");
  std::vector<u64> chi(r);
  for (std::size_t k = 0; k < r; ++k)
    chi[k] = f.mul(f.mul(d, w[k]), f.inv(cl.sizes[k] % f.p()));
  return chi;
}

// chi(g) = sum_j mu_j zeta_e^j with mu_j the multiplicity of eigenvalue
// zeta_e^j of the representing matrix; mu_j = (1/e) sum_l chi(g^l) w^-jl.
ClassFunction lift(const PermGroup &g, const modp::Field &f, u64 omega, const std::vector<u64> &chi) {
  const auto &cl = g.classes();
  const int e = static_cast<int>(g.exponent());
  const u64 inv_e = f.inv(static_cast<u64>(e) % f.p());
  const u64 omega_inv = f.inv(omega);
  ClassFunction out(cl.size());
  for (std::size_t k = 0; k < cl.size(); ++k) {
    std::vector<Rational> mu(e);
    for (int j = 0; j < e; ++j) {
      u64 s = 0;
      const u64 step = f.pow(omega_inv, static_cast<u64>(j));
      u64 w = 1;
      for (int l = 0; l < e; ++l) {
        s = f.add(s, f.mul(chi[cl.power_maps[l][k]], w));
        w = f.mul(w, step);
      }
      s = f.mul(s, inv_e);
      if (s > g.order())
        throw Error(ErrorCode::Internal, "eigenvalue multiplicity out of range");
      mu[j] = Rational(static_cast<unsigned long>(s));
    }
    out[k] = Cyclotomic::from_dense(e, std::move(mu));
  }
  return out;
}

bool row_less(const ClassFunction &a, const ClassFunction &b) {
  if (a[0] != b[0]) // degree ascending
    return a[0].to_integer() < b[0].to_integer();
  for (std::size_t k = 0; k < a.size(); ++k) {
    int c = Cyclotomic::compare(a[k], b[k]);
    if (c != 0)
      return c < 0;
  }
  return false;
}

void verify_orthogonality(const CharacterTable &t) {
  const auto &cl = t.classes();
  const std::size_t r = t.size();
  const Cyclotomic order(static_cast<long>(t.group->order()));
  for (std::size_t a = 0; a < r; ++a)
    for (std::size_t b = a; b < r; ++b) {
      Cyclotomic s;
      for (std::size_t k = 0; k < r; ++k)
        s += Cyclotomic(static_cast<long>(cl.sizes[k])) * t.irreducibles[a][k] *
             t.irreducibles[b][k].conjugate();
      if (s != (a == b ? order : Cyclotomic(0)))
        throw Error(ErrorCode::Internal, "character table failed row orthogonality");
    }
}

} // namespace

CharacterTable character_table(GroupPtr g, const Config &config) {
  if (g->order() > config.order_cap)
    throw Error(ErrorCode::OrderCapExceeded, "group order exceeds the cap");
  u64 p = config.prime_override;
  if (p == 0) {
    p = admissible_primes(*g, 1).front();
  } else if (!is_admissible(*g, p)) {
    throw Error(ErrorCode::InvalidArgument,
                "prime " + std::to_string(p) + " is not admissible: need p prime, p = 1 mod " +
                    std::to_string(g->exponent()) + " and p > 2 sqrt(|G|)");
  }
  const modp::Field f(p);
  const auto &cl = g->classes();
  const std::size_t r = cl.size();
  CharacterTable t;
  t.group = g;
  t.prime = p;

  if (r == 1) {
    t.irreducibles = {{Cyclotomic(1)}};
    return t;
  }
  const ClassConstants a = class_constants(*g);
  std::vector<modp::Matrix> ops;
  for (std::size_t j = 1; j < r; ++j) {
    modp::Matrix m(r, modp::Vec(r, 0));
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t k = 0; k < r; ++k)
        m[i][k] = a(i, j, k) % p;
    ops.push_back(std::move(m));
  }
  std::vector<modp::Vec> vecs = modp::common_eigenvectors(ops, f, config.seed);
  if (vecs.size() != r)
    throw Error(ErrorCode::Internal, "class algebra did not split into " + std::to_string(r) + " lines");
  const u64 omega = modp::primitive_root_of_unity(p, g->exponent());
  for (auto &w : vecs) {
    if (w[0] == 0)
      throw Error(ErrorCode::Internal, "central character vanishes at the identity");
    const u64 s = f.inv(w[0]);
    for (auto &x : w)
      x = f.mul(x, s);
    t.irreducibles.push_back(lift(*g, f, omega, character_mod_p(*g, f, w)));
  }
  std::sort(t.irreducibles.begin(), t.irreducibles.end(), row_less);
  verify_orthogonality(t);
  return t;
}

Cyclotomic inner_product(const CharacterTable &t, const ClassFunction &f, const ClassFunction &g) {
  const auto &cl = t.classes();
  if (f.size() != cl.size() || g.size() != cl.size())
    throw Error(ErrorCode::InvalidArgument, "class function has the wrong length");
  Cyclotomic s;
  for (std::size_t k = 0; k < cl.size(); ++k)
    s += Cyclotomic(static_cast<long>(cl.sizes[k])) * f[k] * g[k].conjugate();
  return s * Cyclotomic(Rational(1, static_cast<long>(t.group->order())));
}

ClassFunction pointwise(const ClassFunction &f, const ClassFunction &g) {
  if (f.size() != g.size())
    throw Error(ErrorCode::InvalidArgument, "class functions differ in length");
  ClassFunction out(f.size());
  for (std::size_t k = 0; k < f.size(); ++k)
    out[k] = f[k] * g[k];
  return out;
}

nlohmann::ordered_json CharacterTable::to_json() const {
  nlohmann::ordered_json j;
  const auto &cl = classes();
  auto names = cl.names();
  auto classes_json = nlohmann::ordered_json::array();
  for (std::size_t k = 0; k < cl.size(); ++k)
    classes_json.push_back({{"name", names[k]},
                            {"order", cl.element_orders[k]},
                            {"size", cl.sizes[k]},
                            {"rep", group->element(cl.representatives[k]).to_cycle_string()}});
  j["classes"] = std::move(classes_json);
  auto rows = nlohmann::ordered_json::array();
  for (const auto &row : irreducibles) {
    auto jr = nlohmann::ordered_json::array();
    for (const auto &x : row)
      jr.push_back(x.to_json());
    rows.push_back(std::move(jr));
  }
  j["irreducibles"] = std::move(rows);
  return j;
}

} // namespace chartwist
