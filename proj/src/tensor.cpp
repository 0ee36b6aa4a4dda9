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
#include <sstream>
#include <unordered_map>

namespace chartwist {

namespace {

constexpr std::size_t kInverseLimit = 4096;

std::uint64_t checked_power(std::size_t n, int k) {
  std::uint64_t p = 1;
  for (int i = 0; i < k; ++i) {
    if (p > (std::uint64_t{1} << 62) / std::max<std::size_t>(n, 1))
      throw Error(ErrorCode::InvalidArgument, "tensor arity too large for this group");
    p *= n;
  }
  return p;
}

} // namespace

// ---------------------------------------------------------------------------
// Tensor
// ---------------------------------------------------------------------------

Tensor::Tensor(GroupPtr g, int arity) : group_(std::move(g)), arity_(arity) {
  if (arity < 1)
    throw Error(ErrorCode::InvalidArgument, "tensor arity must be positive");
  (void)checked_power(group_->order(), arity);
}

Tensor Tensor::one(GroupPtr g, int arity) {
  Tensor t(std::move(g), arity);
  t.terms_.emplace(0, Cyclotomic(1));
  return t;
}

Tensor Tensor::basis(GroupPtr g, const std::vector<int> &elements) {
  Tensor t(std::move(g), static_cast<int>(elements.size()));
  t.terms_.emplace(t.encode(elements), Cyclotomic(1));
  return t;
}

std::vector<int> Tensor::decode(std::uint64_t code) const {
  const std::uint64_t n = group_->order();
  std::vector<int> out(arity_);
  for (int i = arity_ - 1; i >= 0; --i) {
    out[i] = static_cast<int>(code % n);
    code /= n;
  }
  return out;
}

std::uint64_t Tensor::encode(const std::vector<int> &elements) const {
  if (static_cast<int>(elements.size()) != arity_)
    throw Error(ErrorCode::InvalidArgument, "tensor arity mismatch");
  std::uint64_t code = 0;
  for (int x : elements)
    code = code * group_->order() + static_cast<std::uint64_t>(x);
  return code;
}

Cyclotomic Tensor::coefficient(const std::vector<int> &elements) const {
  auto it = terms_.find(encode(elements));
  return it == terms_.end() ? Cyclotomic(0) : it->second;
}

void Tensor::add(const std::vector<int> &elements, const Cyclotomic &c) {
  if (c.is_zero())
    return;
  const std::uint64_t code = encode(elements);
  auto [it, inserted] = terms_.emplace(code, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero())
      terms_.erase(it);
  }
}

Tensor Tensor::operator+(const Tensor &o) const {
  if (o.arity_ != arity_)
    throw Error(ErrorCode::InvalidArgument, "tensor arity mismatch");
  Tensor out = *this;
  for (const auto &[code, c] : o.terms_) {
    auto [it, inserted] = out.terms_.emplace(code, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero())
        out.terms_.erase(it);
    }
  }
  return out;
}

Tensor Tensor::operator-(const Tensor &o) const { return *this + o.scaled(Cyclotomic(-1)); }

Tensor Tensor::scaled(const Cyclotomic &c) const {
  Tensor out(group_, arity_);
  if (c.is_zero())
    return out;
  for (const auto &[code, x] : terms_)
    out.terms_.emplace(code, x * c);
  return out;
}

Tensor Tensor::operator*(const Tensor &o) const {
  if (o.arity_ != arity_)
    throw Error(ErrorCode::InvalidArgument, "tensor arity mismatch");
  std::vector<std::pair<std::vector<int>, const Cyclotomic *>> a, b;
  for (const auto &[code, c] : terms_)
    a.emplace_back(decode(code), &c);
  for (const auto &[code, c] : o.terms_)
    b.emplace_back(decode(code), &c);
  std::unordered_map<std::uint64_t, Cyclotomic> acc;
  std::vector<int> prod(arity_);
  for (const auto &[da, ca] : a)
    for (const auto &[db, cb] : b) {
      for (int i = 0; i < arity_; ++i)
        prod[i] = group_->mul(da[i], db[i]);
      acc[encode(prod)] += *ca * *cb;
    }
  Tensor out(group_, arity_);
  for (auto &[code, c] : acc)
    if (!c.is_zero())
      out.terms_.emplace(code, std::move(c));
  return out;
}

Tensor Tensor::outer(const Tensor &o) const {
  if (o.group_ != group_ && !(o.group_->elements() == group_->elements()))
    throw Error(ErrorCode::InvalidArgument, "tensor factors over different groups");
  Tensor out(group_, arity_ + o.arity_);
  const std::uint64_t shift = checked_power(group_->order(), o.arity_);
  for (const auto &[ca, xa] : terms_)
    for (const auto &[cb, xb] : o.terms_)
      out.terms_.emplace(ca * shift + cb, xa * xb);
  return out;
}

Tensor Tensor::coproduct_at(int slot) const {
  if (slot < 0 || slot >= arity_)
    throw Error(ErrorCode::InvalidArgument, "coproduct slot out of range");
  Tensor out(group_, arity_ + 1);
  for (const auto &[code, c] : terms_) {
    auto d = decode(code);
    d.insert(d.begin() + slot, d[slot]);
    out.terms_.emplace(out.encode(d), c);
  }
  return out;
}

Tensor Tensor::permuted(const std::vector<int> &order) const {
  if (static_cast<int>(order.size()) != arity_)
    throw Error(ErrorCode::InvalidArgument, "factor permutation has the wrong length");
  Tensor out(group_, arity_);
  for (const auto &[code, c] : terms_) {
    auto d = decode(code);
    std::vector<int> e(arity_);
    for (int i = 0; i < arity_; ++i)
      e[i] = d[order[i]];
    out.terms_.emplace(out.encode(e), c);
  }
  return out;
}

std::optional<Tensor> Tensor::inverse() const {
  if (terms_.empty())
    return std::nullopt;
  // Subgroup H of G^arity generated by the support.
  std::vector<std::vector<int>> gens;
  for (const auto &[code, c] : terms_)
    gens.push_back(decode(code));
  std::vector<std::vector<int>> elems{std::vector<int>(arity_, 0)};
  std::unordered_map<std::uint64_t, int> index{{0, 0}};
  std::vector<int> prod(arity_);
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (const auto &s : gens) {
      for (int k = 0; k < arity_; ++k)
        prod[k] = group_->mul(elems[i][k], s[k]);
      const std::uint64_t code = encode(prod);
      if (index.emplace(code, static_cast<int>(elems.size())).second) {
        elems.push_back(prod);
        if (elems.size() > kInverseLimit)
          throw Error(ErrorCode::InvalidArgument, "tensor support generates too large a subgroup to invert");
      }
    }
  // Rows w: sum_u x_u y_{u^-1 w} = [w = 1].
  const std::size_t h = elems.size();
  std::vector<SparseVec> rows(h);
  std::vector<Cyclotomic> rhs(h);
  rhs[0] = Cyclotomic(1);
  std::vector<int> uinv(arity_);
  for (std::size_t w = 0; w < h; ++w) {
    std::map<int, Cyclotomic> row;
    for (std::size_t j = 0; j < gens.size(); ++j) {
      for (int k = 0; k < arity_; ++k)
        uinv[k] = group_->mul(group_->inv(gens[j][k]), elems[w][k]);
      row[index.at(encode(uinv))] += terms_.at(encode(gens[j]));
    }
    rows[w] = to_sparse(row);
  }
  auto y = solve(rows, h, rhs);
  if (!y)
    return std::nullopt;
  Tensor out(group_, arity_);
  for (std::size_t v = 0; v < h; ++v)
    if (!(*y)[v].is_zero())
      out.terms_.emplace(encode(elems[v]), (*y)[v]);
  if (!((*this * out) == one(group_, arity_)) || !((out * *this) == one(group_, arity_)))
    return std::nullopt;
  return out;
}

std::string Tensor::to_string() const {
  if (terms_.empty())
    return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto &[code, c] : terms_) {
    if (!first)
      os << " + ";
    first = false;
    os << "(" << c.to_string() << ")*";
    auto d = decode(code);
    for (int i = 0; i < arity_; ++i)
      os << (i ? "@" : "") << group_->element(d[i]).to_cycle_string();
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Hopf structure
// ---------------------------------------------------------------------------

Tensor coproduct(const Tensor &x) { return x.coproduct_at(0); }

Cyclotomic counit(const Tensor &x) {
  Cyclotomic s;
  for (const auto &[code, c] : x.terms())
    s += c;
  return s;
}

Tensor antipode(const Tensor &x) {
  if (x.arity() != 1)
    throw Error(ErrorCode::InvalidArgument, "antipode acts on k[G]");
  Tensor out(x.group(), 1);
  for (const auto &[code, c] : x.terms())
    out.add({x.group()->inv(static_cast<int>(code))}, c);
  return out;
}

std::vector<NamedCheck> hopf_axioms(GroupPtr g) {
  const int n = static_cast<int>(g->order());
  bool coassoc = true, counit_law = true, antipode_law = true, multiplicative = true, involutive = true;
  for (int x = 0; x < n; ++x) {
    Tensor b = Tensor::basis(g, {x});
    Tensor d = coproduct(b);
    coassoc = coassoc && d.coproduct_at(0) == d.coproduct_at(1);
    // (eps (x) I) D(x) = x = (I (x) eps) D(x)
    Tensor left(g, 1), right(g, 1);
    for (const auto &[code, c] : d.terms()) {
      auto e = d.decode(code);
      left.add({e[1]}, c);
      right.add({e[0]}, c);
    }
    counit_law = counit_law && left == b && right == b;
    // mu (S (x) I) D = eps 1 = mu (I (x) S) D
    Tensor s1(g, 1), s2(g, 1);
    for (const auto &[code, c] : d.terms()) {
      auto e = d.decode(code);
      s1.add({g->mul(g->inv(e[0]), e[1])}, c);
      s2.add({g->mul(e[0], g->inv(e[1]))}, c);
    }
    Tensor unit = Tensor::one(g, 1).scaled(counit(b));
    antipode_law = antipode_law && s1 == unit && s2 == unit;
    involutive = involutive && antipode(antipode(b)) == b;
    for (int y = 0; y < n && multiplicative; ++y) {
      Tensor c = Tensor::basis(g, {y});
      multiplicative = coproduct(b * c) == coproduct(b) * coproduct(c);
    }
  }
  return {{"coassociativity", coassoc},
          {"counit", counit_law},
          {"antipode", antipode_law},
          {"antipode_involutive", involutive},
          {"coproduct_multiplicative", multiplicative}};
}

std::vector<Tensor> abelian_idempotents(GroupPtr g, const Subgroup &a) {
  std::vector<Permutation> perms;
  for (int x : a)
    perms.push_back(g->element(x));
  auto sub = make_group(perms);
  if (!sub->is_abelian())
    throw Error(ErrorCode::NotAbelian, "idempotents need an abelian subgroup");
  auto table = character_table(sub);
  const Cyclotomic scale(Rational(1, static_cast<long>(a.size())));
  std::vector<Tensor> out;
  for (const auto &row : table.irreducibles) {
    Tensor e(g, 1);
    for (int x : a) {
      int local = sub->index_of(g->element(x)).value();
      e.add({x}, row[sub->classes().class_of[local]].conjugate() * scale);
    }
    out.push_back(std::move(e));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Cocycles
// ---------------------------------------------------------------------------

std::size_t TwoCocycle::size() const {
  std::size_t s = 1;
  for (int i = 0; i < rank; ++i)
    s *= static_cast<std::size_t>(m);
  return s;
}

std::vector<int> TwoCocycle::digits(std::size_t s) const {
  std::vector<int> d(rank);
  for (int i = 0; i < rank; ++i) {
    d[i] = static_cast<int>(s % m);
    s /= m;
  }
  return d;
}

std::size_t TwoCocycle::add(std::size_t s, std::size_t t) const {
  auto a = digits(s), b = digits(t);
  std::size_t out = 0;
  for (int i = rank - 1; i >= 0; --i)
    out = out * m + static_cast<std::size_t>((a[i] + b[i]) % m);
  return out;
}

namespace {

TwoCocycle make_cocycle(int m, int rank, auto &&value) {
  TwoCocycle a;
  a.m = m;
  a.rank = rank;
  const std::size_t n = a.size();
  a.values.resize(n * n);
  for (std::size_t s = 0; s < n; ++s)
    for (std::size_t t = 0; t < n; ++t)
      a.values[s * n + t] = value(a.digits(s), a.digits(t));
  return a;
}

} // namespace

TwoCocycle symplectic_cocycle(int n) {
  if (n < 1 || n > 3)
    throw Error(ErrorCode::InvalidArgument, "symplectic cocycles are provided for 1 <= n <= 3");
  return make_cocycle(2, 2 * n, [n](const std::vector<int> &s, const std::vector<int> &t) {
    int beta = 0;
    for (int i = 0; i < n; ++i)
      beta += s[2 * i] * t[2 * i + 1];
    return Cyclotomic(beta % 2 ? -1 : 1);
  });
}

TwoCocycle heisenberg_cocycle(int m) {
  if (m < 2 || !modp::is_prime(static_cast<modp::u64>(m)))
    throw Error(ErrorCode::InvalidArgument, "heisenberg cocycles are provided for prime m");
  // digit 0 = a in C_m, digit 1 = j indexing the character zeta^(j b)
  return make_cocycle(m, 2, [m](const std::vector<int> &s, const std::vector<int> &t) {
    return Cyclotomic::root_of_unity(m, static_cast<long>(s[1]) * t[0]);
  });
}

TwoCocycle trivial_cocycle(int m, int rank) {
  return make_cocycle(m, rank, [](const std::vector<int> &, const std::vector<int> &) { return Cyclotomic(1); });
}

Report is_cocycle(const TwoCocycle &a) {
  const std::size_t n = a.size();
  for (std::size_t s = 0; s < n; ++s)
    if (!a(0, s).is_one() || !a(s, 0).is_one())
      return Report::fail("cocycle is not normalized", {long(s)});
  for (std::size_t s = 0; s < n; ++s)
    for (std::size_t t = 0; t < n; ++t)
      for (std::size_t u = 0; u < n; ++u)
        if (a(s, t) * a(a.add(s, t), u) != a(t, u) * a(s, a.add(t, u)))
          return Report::fail("cocycle identity fails", {long(s), long(t), long(u)});
  return Report::pass();
}

Report is_nondegenerate(const TwoCocycle &a) {
  const std::size_t n = a.size();
  for (std::size_t s = 1; s < n; ++s) {
    bool nontrivial = false;
    for (std::size_t t = 0; t < n && !nontrivial; ++t)
      nontrivial = a(s, t) != a(t, s);
    if (!nontrivial)
      return Report::fail("pairing with this element is trivial", {long(s)});
  }
  return Report::pass();
}

std::vector<int> coordinate_basis(const PermGroup &g, const Subgroup &s, int m, int rank) {
  for (int x : s)
    for (int y : s)
      if (g.mul(x, y) != g.mul(y, x))
        throw Error(ErrorCode::NotAbelian, "subgroup is not abelian");
  std::size_t want = 1;
  for (int i = 0; i < rank; ++i)
    want *= static_cast<std::size_t>(m);
  if (s.size() != want)
    throw Error(ErrorCode::NoDualIdentification,
                "subgroup order " + std::to_string(s.size()) + " does not match the cocycle domain");
  std::vector<int> basis;
  Subgroup span{0};
  for (int x : s) {
    if (static_cast<int>(basis.size()) == rank)
      break;
    if (g.element_order(x) != m || std::binary_search(span.begin(), span.end(), x))
      continue;
    basis.push_back(x);
    span = subgroup_closure(g, basis);
  }
  if (static_cast<int>(basis.size()) != rank || span.size() != want)
    throw Error(ErrorCode::NoDualIdentification,
                "subgroup is not a product of " + std::to_string(rank) + " cyclic groups of order " +
                    std::to_string(m));
  return basis;
}

std::vector<Subgroup> matching_subgroups(const PermGroup &g, int m, int rank) {
  std::vector<Subgroup> out;
  for (const auto &s : normal_abelian_subgroups(g)) {
    try {
      (void)coordinate_basis(g, s, m, rank);
      out.push_back(s);
    } catch (const Error &) {
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Twists and their equations
// ---------------------------------------------------------------------------

int coordinate_element(const PermGroup &g, int m, const std::vector<int> &basis, std::size_t u) {
  int x = 0;
  for (int b : basis) {
    x = g.mul(x, g.pow(b, static_cast<long>(u % m)));
    u /= m;
  }
  return x;
}

std::vector<Tensor> coordinate_idempotents(GroupPtr g, int m, const std::vector<int> &basis) {
  std::size_t n = 1;
  for (std::size_t i = 0; i < basis.size(); ++i)
    n *= static_cast<std::size_t>(m);
  std::vector<int> embed(n);
  for (std::size_t u = 0; u < n; ++u)
    embed[u] = coordinate_element(*g, m, basis, u);
  const Cyclotomic scale(Rational(1, static_cast<long>(n)));
  std::vector<Tensor> idem;
  for (std::size_t s = 0; s < n; ++s) {
    Tensor e(g, 1);
    for (std::size_t u = 0; u < n; ++u) {
      long dot = 0;
      for (std::size_t i = 0, a = s, b = u; i < basis.size(); ++i, a /= m, b /= m)
        dot += static_cast<long>(a % m) * static_cast<long>(b % m);
      e.add({embed[u]}, Cyclotomic::root_of_unity(m, -dot) * scale);
    }
    idem.push_back(std::move(e));
  }
  return idem;
}

Twist twist_from_cocycle(GroupPtr g, const TwoCocycle &a, const std::vector<int> &basis) {
  if (static_cast<int>(basis.size()) != a.rank)
    throw Error(ErrorCode::InvalidArgument, "basis length differs from the cocycle rank");
  const std::size_t n = a.size();
  const auto idem = coordinate_idempotents(g, a.m, basis);
  Tensor f(g, 2), f_inv(g, 2);
  for (std::size_t s = 0; s < n; ++s)
    for (std::size_t t = 0; t < n; ++t) {
      Tensor et = idem[s].outer(idem[t]);
      f = f + et.scaled(a(s, t));
      f_inv = f_inv + et.scaled(a(s, t).inverse());
    }
  return {std::move(f), std::move(f_inv), TwistSource{a, basis}};
}

Twist make_twist(const Tensor &f) {
  if (f.arity() != 2)
    throw Error(ErrorCode::InvalidArgument, "a twist lives in k[G] (x) k[G]");
  auto inv = f.inverse();
  if (!inv)
    throw Error(ErrorCode::InvalidArgument, "twist is not invertible");
  return {f, *inv, std::nullopt};
}

Tensor twisted_coproduct(const Twist &t, int g) {
  return t.f * Tensor::basis(t.f.group(), {g, g}) * t.f_inv;
}

bool check_symmetric(const Tensor &f) { return f.permuted({1, 0}) == f; }

bool check_cocommutative(const Twist &t) {
  for (int g = 0; g < static_cast<int>(t.f.group()->order()); ++g) {
    Tensor d = twisted_coproduct(t, g);
    if (!(d.permuted({1, 0}) == d))
      return false;
  }
  return true;
}

Report check_dual_cocycle(const Tensor &f, const Tensor &phi) {
  const auto &g = f.group();
  Tensor lhs = Tensor::one(g, 1).outer(f) * f.coproduct_at(1);
  Tensor rhs = f.outer(Tensor::one(g, 1)) * f.coproduct_at(0) * phi;
  if (lhs == rhs)
    return Report::pass();
  return Report::fail("(1 (x) F)(I (x) D)(F) != (F (x) 1)(D (x) I)(F) Phi", {});
}

Tensor associator(const Twist &t) {
  const auto &g = t.f.group();
  const Tensor one = Tensor::one(g, 1);
  return t.f_inv.coproduct_at(0) * t.f_inv.outer(one) * one.outer(t.f) * t.f.coproduct_at(1);
}

bool pentagon_check(const Tensor &phi) {
  if (phi.arity() != 3)
    throw Error(ErrorCode::InvalidArgument, "an associator lives in k[G]^(x)3");
  const Tensor one = Tensor::one(phi.group(), 1);
  Tensor lhs = phi.outer(one) * phi.coproduct_at(1) * one.outer(phi);
  Tensor rhs = phi.coproduct_at(0) * phi.coproduct_at(2);
  return lhs == rhs;
}

bool is_invariant(const Tensor &c) {
  const auto &g = c.group();
  for (int s : g->generator_indices()) {
    Tensor gg = Tensor::basis(g, std::vector<int>(c.arity(), s));
    if (!(gg * c == c * gg))
      return false;
  }
  return true;
}

Tensor gauge_associator(const Tensor &phi, const Tensor &c) {
  if (c.arity() != 2 || phi.arity() != 3)
    throw Error(ErrorCode::InvalidArgument, "gauge needs C in k[G]^(x)2 and Phi in k[G]^(x)3");
  if (!is_invariant(c))
    throw Error(ErrorCode::InvalidArgument, "gauge element is not G-invariant");
  auto inv = c.inverse();
  if (!inv)
    throw Error(ErrorCode::InvalidArgument, "gauge element is not invertible");
  const Tensor one = Tensor::one(c.group(), 1);
  return inv->coproduct_at(0) * inv->outer(one) * phi * one.outer(c) * c.coproduct_at(1);
}

} // namespace chartwist
