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
#include "chartwist/twist_lab.hpp"

#include "chartwist/error.hpp"
#include "chartwist/modular.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <unordered_map>

namespace chartwist {

namespace {

SparseVec basis_vec(std::size_t i) { return {{static_cast<int>(i), Cyclotomic(1)}}; }

// Image of v under the action of group element g.
SparseVec act(const AlgebraAction &a, std::size_t g, const SparseVec &v) {
  SparseVec out;
  for (const auto &[i, x] : v)
    out = axpy(out, x, a.images[g][i]);
  return out;
}

std::vector<std::vector<int>> table_of(const PermGroup &g) {
  const int n = static_cast<int>(g.order());
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      t[a][b] = g.mul(a, b);
  return t;
}

} // namespace

// ---------------------------------------------------------------------------
// Finite algebras
// ---------------------------------------------------------------------------

SparseVec FiniteAlgebra::multiply(const SparseVec &a, const SparseVec &b) const {
  std::map<int, Cyclotomic> acc;
  for (const auto &[i, x] : a)
    for (const auto &[j, y] : b) {
      const Cyclotomic xy = x * y;
      for (const auto &[k, z] : product(i, j))
        acc[k] += xy * z;
    }
  return to_sparse(acc);
}

Report check_associative(const FiniteAlgebra &a) {
  for (std::size_t i = 0; i < a.dim; ++i)
    for (std::size_t j = 0; j < a.dim; ++j) {
      const SparseVec &ij = a.product(i, j);
      for (std::size_t k = 0; k < a.dim; ++k)
        if (a.multiply(ij, basis_vec(k)) != a.multiply(basis_vec(i), a.product(j, k)))
          return Report::fail("associativity fails", {long(i), long(j), long(k)});
    }
  return Report::pass();
}

Report check_unit(const FiniteAlgebra &a) {
  for (std::size_t i = 0; i < a.dim; ++i) {
    const SparseVec e = basis_vec(i);
    if (a.multiply(a.unit, e) != e || a.multiply(e, a.unit) != e)
      return Report::fail("unit axiom fails", {long(i)});
  }
  return Report::pass();
}

bool is_commutative(const FiniteAlgebra &a) {
  for (std::size_t i = 0; i < a.dim; ++i)
    for (std::size_t j = i + 1; j < a.dim; ++j)
      if (a.product(i, j) != a.product(j, i))
        return false;
  return true;
}

Report check_action(const FiniteAlgebra &a) {
  if (!a.action)
    return Report::fail("algebra carries no group action", {});
  const AlgebraAction &act_ = *a.action;
  const std::size_t n = act_.order();
  if (act_.images.size() != n)
    return Report::fail("action table and images disagree in size", {});
  for (std::size_t i = 0; i < a.dim; ++i)
    if (act_.images[0][i] != basis_vec(i))
      return Report::fail("identity does not act trivially", {0, long(i)});
  for (std::size_t g = 0; g < n; ++g) {
    if (act(act_, g, a.unit) != a.unit)
      return Report::fail("action does not fix the unit", {long(g)});
    for (std::size_t i = 0; i < a.dim; ++i)
      for (std::size_t j = 0; j < a.dim; ++j)
        if (act(act_, g, a.product(i, j)) != a.multiply(act_.images[g][i], act_.images[g][j]))
          return Report::fail("action is not multiplicative", {long(g), long(i), long(j)});
  }
  for (std::size_t g = 0; g < n; ++g)
    for (std::size_t h = 0; h < n; ++h)
      for (std::size_t i = 0; i < a.dim; ++i)
        if (act(act_, g, act_.images[h][i]) != act_.images[act_.table[g][h]][i])
          return Report::fail("not a left action", {long(g), long(h), long(i)});
  return Report::pass();
}

FiniteAlgebra function_algebra_trivial(GroupPtr g) {
  const std::size_t n = g->order();
  FiniteAlgebra a;
  a.dim = n;
  a.products.resize(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    a.products[i * n + i] = basis_vec(i);
    a.unit.emplace_back(static_cast<int>(i), Cyclotomic(1));
  }
  AlgebraAction act_;
  act_.table = table_of(*g);
  act_.images.assign(n, {});
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t i = 0; i < n; ++i)
      act_.images[x].push_back(basis_vec(i));
  a.action = std::move(act_);
  return a;
}

FiniteAlgebra function_algebra(GroupPtr g) {
  FiniteAlgebra a = function_algebra_trivial(g);
  const int n = static_cast<int>(g->order());
  // g delta_h = delta_{h g^-1}
  for (int x = 0; x < n; ++x)
    for (int h = 0; h < n; ++h)
      a.action->images[x][h] = basis_vec(g->mul(h, g->inv(x)));
  return a;
}

FiniteAlgebra dual_algebra(const Twist &t) {
  const GroupPtr &g = t.f.group();
  FiniteAlgebra a = function_algebra(g);
  const int n = static_cast<int>(g->order());
  // (l m)(x) = sum f_{a,b} l(a x) m(b x): delta_{ax} delta_{bx} gets f_{a,b} delta_x.
  std::vector<std::map<int, Cyclotomic>> acc(static_cast<std::size_t>(n) * n);
  for (const auto &[code, c] : t.f.terms()) {
    auto d = t.f.decode(code);
    for (int x = 0; x < n; ++x)
      acc[static_cast<std::size_t>(g->mul(d[0], x)) * n + g->mul(d[1], x)][x] += c;
  }
  for (std::size_t k = 0; k < acc.size(); ++k)
    a.products[k] = to_sparse(acc[k]);
  return a;
}

// ---------------------------------------------------------------------------
// Group-likes
// ---------------------------------------------------------------------------

GroupPtr GroupLikes::as_group() const { return group_from_table(table, 0); }

namespace {

// The root of unity c as zeta_K^j, if it is one.
std::optional<std::pair<int, long>> as_root_of_unity(const Cyclotomic &c) {
  const int k = 2 * c.conductor();
  for (long j = 0; j < k; ++j)
    if (Cyclotomic::root_of_unity(k, j) == c)
      return std::make_pair(k, j);
  return std::nullopt;
}

bool is_group_like(const Twist &t, const Tensor &x) { return t.f * coproduct(x) == x.outer(x) * t.f; }

// u g with u = sum beta(s) e_s, one coset of S at a time.
std::vector<Tensor> group_likes_from_cocycle(const Twist &t) {
  const GroupPtr &g = t.f.group();
  const TwoCocycle &a = t.source->cocycle;
  const auto &basis = t.source->basis;
  const int m = a.m;
  const std::size_t ns = a.size();
  const auto idem = coordinate_idempotents(g, m, basis);
  std::vector<int> embed(ns), coords(g->order(), -1);
  for (std::size_t u = 0; u < ns; ++u) {
    embed[u] = coordinate_element(*g, m, basis, u);
    coords[embed[u]] = static_cast<int>(u);
  }
  auto dot = [&](std::size_t s, std::size_t u) {
    long d = 0;
    for (int i = 0; i < a.rank; ++i, s /= m, u /= m)
      d += static_cast<long>(s % m) * static_cast<long>(u % m);
    return d % m;
  };
  std::vector<std::size_t> unit(a.rank);
  for (int i = 0, w = 1; i < a.rank; ++i, w *= m)
    unit[i] = static_cast<std::size_t>(w);

  std::vector<Tensor> out;
  std::vector<bool> covered(g->order(), false);
  for (int x = 0; x < static_cast<int>(g->order()); ++x) {
    if (covered[x])
      continue;
    for (int y : embed)
      covered[g->mul(y, x)] = true;
    // g e_s g^-1 = e_{pi(s)} with zeta^{pi(s).coords(g u g^-1)} = zeta^{s.u}
    std::vector<std::size_t> pi(ns), pi_inv(ns);
    for (std::size_t s = 0; s < ns; ++s)
      for (std::size_t s2 = 0; s2 < ns; ++s2) {
        bool match = true;
        for (int i = 0; i < a.rank && match; ++i) {
          const int conj = coords[g->conj(embed[unit[i]], g->inv(x))];
          match = dot(s2, static_cast<std::size_t>(conj)) == dot(s, unit[i]);
        }
        if (match) {
          pi[s] = s2;
          pi_inv[s2] = s;
          break;
        }
      }
    auto gamma = [&](std::size_t s, std::size_t u) { return a(s, u) / a(pi_inv[s], pi_inv[u]); };
    // beta(s) beta(u) = gamma(s, u) beta(s + u)
    std::vector<Cyclotomic> gen(a.rank);
    bool ok = true;
    for (int i = 0; i < a.rank && ok; ++i) {
      Cyclotomic c(1);
      for (int k = 0; k < m; ++k)
        c *= gamma(static_cast<std::size_t>(k) * unit[i], unit[i]);
      auto root = as_root_of_unity(c);
      if (!root) {
        ok = false;
        break;
      }
      gen[i] = Cyclotomic::root_of_unity(m * root->first, root->second);
    }
    if (!ok)
      continue;
    std::vector<Cyclotomic> beta(ns);
    beta[0] = Cyclotomic(1);
    for (std::size_t s = 1; s < ns; ++s) {
      int i = 0;
      while ((s / unit[i]) % m == 0)
        ++i;
      const std::size_t prev = s - unit[i];
      beta[s] = beta[prev] * gen[i] / gamma(prev, unit[i]);
    }
    Tensor u(g, 1);
    for (std::size_t s = 0; s < ns; ++s)
      u = u + idem[s].scaled(beta[s]);
    const Tensor ug = u * Tensor::basis(g, {x});
    if (!is_group_like(t, ug))
      continue;
    for (int y : embed)
      out.push_back(ug * Tensor::basis(g, {y}));
  }
  return out;
}

std::vector<Tensor> group_likes_mod_p(const Twist &t, const Config &config) {
  const GroupPtr &g = t.f.group();
  const int n = static_cast<int>(g->order());
  // c^x_{a,b} = coefficient of a (x) b in D_F(x).
  std::vector<Tensor> dfs;
  int conductor = 1;
  for (int x = 0; x < n; ++x) {
    dfs.push_back(twisted_coproduct(t, x));
    for (const auto &[code, c] : dfs.back().terms())
      conductor = std::lcm(conductor, c.conductor());
  }
  const modp::u64 p = modp::next_prime_congruent_one(static_cast<modp::u64>(conductor), modp::u64{1} << 61);
  const modp::Field f(p);
  const modp::u64 omega = modp::primitive_root_of_unity(p, static_cast<modp::u64>(conductor));
  // (L_a)[b][x] = c^x_{a,b}
  std::vector<modp::Matrix> ops(n, modp::Matrix(n, modp::Vec(n, 0)));
  for (int x = 0; x < n; ++x)
    for (const auto &[code, c] : dfs[x].terms()) {
      auto d = dfs[x].decode(code);
      ops[d[0]][d[1]][x] = reduce_mod_p(c, p, conductor, omega);
    }
  std::vector<Tensor> found;
  for (auto &v : modp::common_eigenvectors(ops, f, config.seed)) {
    modp::u64 sum = 0;
    for (auto x : v)
      sum = f.add(sum, x);
    if (sum == 0)
      continue;
    const modp::u64 s_inv = f.inv(sum);
    Tensor x(g, 1);
    bool rational = true;
    for (int b = 0; b < n && rational; ++b) {
      auto q = modp::rational_reconstruction(f.mul(v[b], s_inv), p);
      if (q)
        x.add({b}, Cyclotomic(Rational(*q)));
      rational = q.has_value();
    }
    if (rational && is_group_like(t, x))
      found.push_back(std::move(x));
  }
  return found;
}

} // namespace

GroupLikes group_likes(const Twist &t, const Config &config) {
  if (!check_cocommutative(t))
    throw Error(ErrorCode::NotCocommutative, "twisted coproduct is not cocommutative");
  const GroupPtr &g = t.f.group();
  const int n = static_cast<int>(g->order());
  std::vector<Tensor> found;
  try {
    found = t.source ? group_likes_from_cocycle(t) : group_likes_mod_p(t, config);
  } catch (const Error &e) {
    if (e.code() != ErrorCode::NotSemisimple)
      throw;
  }
  if (static_cast<int>(found.size()) != n)
    throw Error(ErrorCode::NotSemisimple, "found " + std::to_string(found.size()) + " group-likes, expected " +
                                              std::to_string(n));
  const Tensor id = Tensor::one(g, 1);
  auto less = [&](const Tensor &a, const Tensor &b) {
    if (a == id || b == id)
      return a == id && !(b == id);
    return std::lexicographical_compare(a.terms().begin(), a.terms().end(), b.terms().begin(), b.terms().end(),
                                        [](const auto &x, const auto &y) {
                                          if (x.first != y.first)
                                            return x.first < y.first;
                                          return Cyclotomic::compare(x.second, y.second) < 0;
                                        });
  };
  std::sort(found.begin(), found.end(), less);
  if (!(found.front() == id))
    throw Error(ErrorCode::Internal, "identity is not group-like");
  GroupLikes gl;
  gl.elements = std::move(found);
  gl.table.assign(n, std::vector<int>(n, -1));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      Tensor ab = gl.elements[a] * gl.elements[b];
      for (int c = 0; c < n; ++c)
        if (gl.elements[c] == ab) {
          gl.table[a][b] = c;
          break;
        }
      if (gl.table[a][b] < 0)
        throw Error(ErrorCode::Internal, "group-likes are not closed under products");
    }
  return gl;
}

std::optional<std::string> identify_group(const PermGroup &g) {
  const std::size_t n = g.order();
  std::vector<std::string> names;
  if (n == 8)
    names.push_back("Q8");
  for (int k = 1; (std::size_t{1} << k) <= n; ++k)
    if ((std::size_t{1} << k) == n && k >= 2)
      names.push_back("E2^" + std::to_string(k));
  names.push_back("C" + std::to_string(n));
  if (n >= 4 && n % 2 == 0)
    names.push_back("D" + std::to_string(n));
  for (int k = 3, f = 6; k <= 6; ++k, f *= k) {
    if (static_cast<std::size_t>(f) == n)
      names.push_back("S" + std::to_string(k));
    if (static_cast<std::size_t>(f / 2) == n && k >= 4)
      names.push_back("A" + std::to_string(k));
  }
  for (const auto &name : names) {
    auto h = named_group(name);
    if (h->order() == n && is_isomorphic(g, *h, 100000))
      return name;
  }
  return std::nullopt;
}

AlgebraAction group_likes_action(const Twist &t, const GroupLikes &gl) {
  const GroupPtr &g = t.f.group();
  const int n = static_cast<int>(g->order());
  AlgebraAction a;
  a.table = gl.table;
  a.images.assign(gl.elements.size(), std::vector<SparseVec>(n));
  for (std::size_t x = 0; x < gl.elements.size(); ++x) {
    std::size_t xinv = 0;
    while (gl.table[x][xinv] != 0)
      ++xinv;
    // x delta_y = sum_u c_u delta_{u^-1 y} where x^-1 = sum c_u u
    for (int y = 0; y < n; ++y) {
      std::map<int, Cyclotomic> acc;
      for (const auto &[code, c] : gl.elements[xinv].terms())
        acc[g->mul(g->inv(static_cast<int>(code)), y)] += c;
      a.images[x][y] = to_sparse(acc);
    }
  }
  return a;
}

// ---------------------------------------------------------------------------
// Galois objects
// ---------------------------------------------------------------------------

FiniteAlgebra cross_product(const FiniteAlgebra &r) {
  if (!r.action)
    throw Error(ErrorCode::InvalidArgument, "cross product needs a group action");
  const AlgebraAction &act_ = *r.action;
  const std::size_t n = act_.order(), d = r.dim, dim = d * n;
  FiniteAlgebra out;
  out.dim = dim;
  out.products.resize(dim * dim);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t g = 0; g < n; ++g)
      for (std::size_t j = 0; j < d; ++j) {
        const SparseVec ag = r.multiply(basis_vec(i), act_.images[g][j]);
        for (std::size_t f = 0; f < n; ++f) {
          SparseVec v;
          const std::size_t gf = static_cast<std::size_t>(act_.table[g][f]);
          for (const auto &[k, c] : ag)
            v.emplace_back(static_cast<int>(k * n + gf), c);
          std::sort(v.begin(), v.end(), [](const auto &a, const auto &b) { return a.first < b.first; });
          out.products[(i * n + g) * dim + j * n + f] = std::move(v);
        }
      }
  for (const auto &[k, c] : r.unit)
    out.unit.emplace_back(static_cast<int>(k * n), c);
  return out;
}

nlohmann::ordered_json GaloisReport::to_json() const {
  return {{"theta_bijective", theta_bijective}, {"dim", dim},
          {"group_order", group_order},         {"theta_rank", theta_rank},
          {"semisimple", semisimple},           {"center_dim", center_dim},
          {"invariant_center_dim", invariant_center_dim},
          {"transitive", transitive},           {"galois", galois()}};
}

GaloisReport galois_check(const FiniteAlgebra &r) {
  if (!r.action)
    throw Error(ErrorCode::InvalidArgument, "Galois check needs a group action");
  const AlgebraAction &act_ = *r.action;
  const std::size_t d = r.dim, n = act_.order();
  GaloisReport rep;
  rep.dim = d;
  rep.group_order = n;
  // theta(e_i * g) as a vector in End(R): entry k*d + j = [e_i g(e_j)]_k
  RowReducer theta(d * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t g = 0; g < n; ++g) {
      std::map<int, Cyclotomic> v;
      for (std::size_t j = 0; j < d; ++j)
        for (const auto &[k, c] : r.multiply(basis_vec(i), act_.images[g][j]))
          v[static_cast<int>(k * d + j)] += c;
      theta.add(to_sparse(v));
    }
  rep.theta_rank = theta.rank();
  rep.theta_bijective = d * n == d * d && rep.theta_rank == d * d;

  // trace form
  std::vector<Cyclotomic> tr(d);
  for (std::size_t l = 0; l < d; ++l)
    for (std::size_t k = 0; k < d; ++k)
      for (const auto &[idx, c] : r.product(l, k))
        if (static_cast<std::size_t>(idx) == k)
          tr[l] += c;
  std::vector<SparseVec> form(d);
  for (std::size_t i = 0; i < d; ++i) {
    std::map<int, Cyclotomic> row;
    for (std::size_t j = 0; j < d; ++j) {
      Cyclotomic s;
      for (const auto &[l, c] : r.product(i, j))
        s += c * tr[l];
      if (!s.is_zero())
        row[static_cast<int>(j)] = s;
    }
    form[i] = to_sparse(row);
  }
  rep.semisimple = rank(form, d) == d;

  // center: sum_l x_l (e_l e_i - e_i e_l) = 0
  std::vector<std::map<int, Cyclotomic>> eq(d * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t l = 0; l < d; ++l) {
      for (const auto &[k, c] : r.product(l, i))
        eq[i * d + k][static_cast<int>(l)] += c;
      for (const auto &[k, c] : r.product(i, l))
        eq[i * d + k][static_cast<int>(l)] -= c;
    }
  std::vector<SparseVec> rows;
  for (auto &m : eq) {
    auto v = to_sparse(m);
    if (!v.empty())
      rows.push_back(std::move(v));
  }
  rep.center_dim = d - rank(rows, d);
  // fixed by every g: sum_l x_l (g(e_l) - e_l) = 0
  for (std::size_t g = 1; g < n; ++g) {
    std::vector<std::map<int, Cyclotomic>> fix(d);
    for (std::size_t l = 0; l < d; ++l) {
      for (const auto &[k, c] : act_.images[g][l])
        fix[k][static_cast<int>(l)] += c;
      fix[l][static_cast<int>(l)] -= Cyclotomic(1);
    }
    for (auto &m : fix) {
      auto v = to_sparse(m);
      if (!v.empty())
        rows.push_back(std::move(v));
    }
  }
  rep.invariant_center_dim = d - rank(rows, d);
  rep.transitive = rep.invariant_center_dim == 1;
  return rep;
}

FiniteAlgebra induced_algebra(const FiniteAlgebra &b, GroupPtr g, const Subgroup &s) {
  if (!b.action || b.action->order() != s.size())
    throw Error(ErrorCode::InvalidArgument, "induction needs an action of the subgroup");
  const int n = static_cast<int>(g->order());
  std::vector<int> position(n, -1);
  for (std::size_t i = 0; i < s.size(); ++i)
    position[s[i]] = static_cast<int>(i);
  // right cosets S r, representative = least element
  std::vector<int> coset(n, -1), reps;
  for (int x = 0; x < n; ++x) {
    if (coset[x] >= 0)
      continue;
    for (int y : s)
      coset[g->mul(y, x)] = static_cast<int>(reps.size());
    reps.push_back(x);
  }
  const std::size_t m = reps.size(), db = b.dim, dim = m * db;
  FiniteAlgebra out;
  out.dim = dim;
  out.products.resize(dim * dim);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t k = 0; k < db; ++k)
      for (std::size_t l = 0; l < db; ++l) {
        SparseVec v;
        for (const auto &[t, c] : b.product(k, l))
          v.emplace_back(static_cast<int>(i * db + t), c);
        out.products[(i * db + k) * dim + i * db + l] = std::move(v);
      }
  for (std::size_t i = 0; i < m; ++i)
    for (const auto &[t, c] : b.unit)
      out.unit.emplace_back(static_cast<int>(i * db + t), c);
  // E_{i,k} is the function supported on S r_i with E(r_i) = e_k.
  // (f a)(r_j) = a(r_j f) = a(s r_i') = s(a(r_i')).
  AlgebraAction act_;
  act_.table = table_of(*g);
  act_.images.assign(n, std::vector<SparseVec>(dim));
  for (int f = 0; f < n; ++f)
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) {
        const int rf = g->mul(reps[j], f);
        if (static_cast<std::size_t>(coset[rf]) != i)
          continue;
        const int sv = g->mul(rf, g->inv(reps[i]));
        for (std::size_t k = 0; k < db; ++k) {
          SparseVec &img = act_.images[f][i * db + k];
          for (const auto &[t, c] : b.action->images[position[sv]][k])
            img.emplace_back(static_cast<int>(j * db + t), c);
          std::sort(img.begin(), img.end(), [](const auto &x, const auto &y) { return x.first < y.first; });
        }
      }
  out.action = std::move(act_);
  return out;
}

// ---------------------------------------------------------------------------
// Class-preserving automorphisms
// ---------------------------------------------------------------------------

TwistWitness class_preserving_twist_witness(GroupPtr g, const GroupMap &phi, const Config &config) {
  const int n = static_cast<int>(g->order());
  if (static_cast<int>(phi.size()) != n)
    throw Error(ErrorCode::InvalidArgument, "automorphism has the wrong size");
  for (int x = 0; x < n; ++x)
    if (g->classes().class_of[phi[x]] != g->classes().class_of[x])
      throw Error(ErrorCode::NotClassPreserving, "automorphism moves a conjugacy class");
  // c g = phi(g) c: coefficient of w gives c_{w g^-1} - c_{phi(g)^-1 w} = 0
  std::vector<SparseVec> rows;
  for (int s : g->generator_indices())
    for (int w = 0; w < n; ++w) {
      std::map<int, Cyclotomic> row;
      row[g->mul(w, g->inv(s))] += Cyclotomic(1);
      row[g->mul(g->inv(phi[s]), w)] -= Cyclotomic(1);
      auto v = to_sparse(row);
      if (!v.empty())
        rows.push_back(std::move(v));
    }
  const auto basis = nullspace(rows, n);
  std::mt19937_64 rng(config.seed);
  std::uniform_int_distribution<long> coef(-3, 3);
  for (int attempt = 0; attempt < 64 && !basis.empty(); ++attempt) {
    SparseVec v;
    if (attempt < static_cast<int>(basis.size()))
      v = basis[attempt];
    else
      for (const auto &b : basis)
        v = axpy(v, Cyclotomic(coef(rng)), b);
    if (v.empty())
      continue;
    Tensor c(g, 1);
    for (const auto &[i, x] : v)
      c.add({i}, x);
    auto c_inv = c.inverse();
    if (!c_inv)
      continue;
    bool ok = true;
    for (int s : g->generator_indices())
      ok = ok && c * Tensor::basis(g, {s}) * *c_inv == Tensor::basis(g, {phi[s]});
    if (!ok)
      throw Error(ErrorCode::Internal, "intertwiner fails verification");
    TwistWitness w{c, *c_inv, coproduct(*c_inv) * c.outer(c), false};
    w.f_invariant = is_invariant(w.f);
    return w;
  }
  throw Error(ErrorCode::NotClassPreserving, "no invertible intertwiner found");
}

} // namespace chartwist
