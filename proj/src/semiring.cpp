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
#include "chartwist/semiring.hpp"

#include "chartwist/error.hpp"
#include "chartwist/modular.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

namespace chartwist {

FusionSemiring::FusionSemiring(std::vector<std::string> labels)
    : labels_(std::move(labels)), c_(labels_.size() * labels_.size() * labels_.size(), 0) {
  if (labels_.empty())
    throw Error(ErrorCode::InvalidArgument, "a semiring needs at least one label");
}

bool FusionSemiring::is_commutative() const {
  const std::size_t n = size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      for (std::size_t x = 0; x < n; ++x)
        if (m(a, b, x) != m(b, a, x))
          return false;
  return true;
}

nlohmann::ordered_json FusionSemiring::to_json() const {
  nlohmann::ordered_json j;
  j["labels"] = labels_;
  j["identity"] = identity_;
  if (conjugation_)
    j["conjugation"] = *conjugation_;
  else
    j["conjugation"] = nullptr;
  auto quads = nlohmann::ordered_json::array();
  const std::size_t n = size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t x = 0; x < n; ++x)
        if (m(a, b, x) != 0)
          quads.push_back({a, b, x, m(a, b, x)});
  j["constants"] = std::move(quads);
  return j;
}

FusionSemiring FusionSemiring::from_json(const nlohmann::json &j) {
  try {
    if (!j.is_object())
      throw Error(ErrorCode::ParseError, "semiring: expected a JSON object");
    FusionSemiring s(j.at("labels").get<std::vector<std::string>>());
    const long n = static_cast<long>(s.size());
    auto index = [n](const nlohmann::json &v, const char *what) {
      long i = v.get<long>();
      if (i < 0 || i >= n)
        throw Error(ErrorCode::ParseError, std::string("semiring: ") + what + " index " +
                                               std::to_string(i) + " out of range");
      return static_cast<std::size_t>(i);
    };
    s.identity_ = index(j.at("identity"), "identity");
    if (j.contains("conjugation") && !j["conjugation"].is_null()) {
      std::vector<int> c;
      for (const auto &v : j["conjugation"])
        c.push_back(static_cast<int>(index(v, "conjugation")));
      if (static_cast<long>(c.size()) != n)
        throw Error(ErrorCode::ParseError, "semiring: conjugation has the wrong length");
      s.conjugation_ = std::move(c);
    }
    for (const auto &q : j.at("constants")) {
      if (!q.is_array() || q.size() != 4)
        throw Error(ErrorCode::ParseError, "semiring: constants are [x1, x2, x, m] quadruples");
      std::size_t a = index(q[0], "constant"), b = index(q[1], "constant"), x = index(q[2], "constant");
      s.set(a, b, x, s.m(a, b, x) + q[3].get<long>());
    }
    return s;
  } catch (const nlohmann::json::exception &e) {
    throw Error(ErrorCode::ParseError, std::string("semiring: ") + e.what());
  }
}

Report validate(const FusionSemiring &s) {
  const std::size_t n = s.size();
  const std::size_t e = s.identity();
  auto L = [](std::initializer_list<std::size_t> v) { return std::vector<long>(v.begin(), v.end()); };
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t x = 0; x < n; ++x)
        if (s.m(a, b, x) < 0)
          return Report::fail("negative structure constant", L({a, b, x}));
  for (std::size_t t = 0; t < n; ++t)
    for (std::size_t x = 0; x < n; ++x) {
      long want = t == x ? 1 : 0;
      if (s.m(t, e, x) != want || s.m(e, t, x) != want)
        return Report::fail("identity axiom fails", L({t, x}));
    }
  // (x1 x2) x3 = x1 (x2 x3), coefficient of x
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        for (std::size_t x = 0; x < n; ++x) {
          long left = 0, right = 0;
          for (std::size_t t = 0; t < n; ++t) {
            if (long u = s.m(b, c, t))
              right += s.m(a, t, x) * u;
            if (long u = s.m(a, b, t))
              left += u * s.m(t, c, x);
          }
          if (left != right)
            return Report::fail("associativity fails", L({a, b, c, x}));
        }
  if (const auto &conj = s.conjugation()) {
    const auto &c = *conj;
    for (std::size_t x = 0; x < n; ++x)
      if (c[x] < 0 || static_cast<std::size_t>(c[x]) >= n || c[c[x]] != static_cast<int>(x))
        return Report::fail("conjugation is not an involution", L({x}));
    if (c[e] != static_cast<int>(e))
      return Report::fail("conjugation moves the identity", L({e}));
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y)
        for (std::size_t z = 0; z < n; ++z)
          if (s.m(x, y, z) != s.m(c[x], z, y))
            return Report::fail("rigidity fails", L({x, y, z}));
  }
  return Report::pass();
}

FusionSemiring fusion_constants(const CharacterTable &t) {
  const std::size_t r = t.size();
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < r; ++i)
    labels.push_back("chi" + std::to_string(i + 1));
  FusionSemiring s(std::move(labels));
  s.set_identity(0);
  for (std::size_t a = 0; a < r; ++a)
    for (std::size_t b = a; b < r; ++b) {
      ClassFunction prod = pointwise(t.irreducibles[a], t.irreducibles[b]);
      for (std::size_t x = 0; x < r; ++x) {
        Cyclotomic v = inner_product(t, prod, t.irreducibles[x]);
        if (!v.is_nonneg_integer())
          throw Error(ErrorCode::NonIntegralFusion,
                      "fusion coefficient " + v.to_string() + " is not a nonnegative integer");
        long m = v.to_integer().get_si();
        s.set(a, b, x, m);
        s.set(b, a, x, m);
      }
    }
  std::vector<int> conj(r, -1);
  for (std::size_t a = 0; a < r; ++a) {
    ClassFunction bar(t.irreducibles[a].size());
    for (std::size_t k = 0; k < bar.size(); ++k)
      bar[k] = t.irreducibles[a][k].conjugate();
    for (std::size_t b = 0; b < r; ++b)
      if (t.irreducibles[b] == bar)
        conj[a] = static_cast<int>(b);
    if (conj[a] < 0)
      throw Error(ErrorCode::Internal, "complex conjugate row missing from the table");
  }
  s.set_conjugation(std::move(conj));
  s.set_origin(t);
  return s;
}

// ---------------------------------------------------------------------------
// Degree maps
// ---------------------------------------------------------------------------

namespace {

struct DegreeSearch {
  const FusionSemiring &s;
  std::vector<long> bound;
  std::size_t limit;
  std::vector<DegreeMap> found;

  // Fills forced values from linear equations; false on contradiction.
  bool propagate(std::vector<long> &d) const {
    const std::size_t n = s.size();
    for (bool changed = true; changed;) {
      changed = false;
      for (std::size_t a = 0; a < n; ++a) {
        if (d[a] < 0)
          continue;
        for (std::size_t b = 0; b < n; ++b) {
          if (d[b] < 0)
            continue;
          long rhs = d[a] * d[b];
          long unknown_coef = 0;
          std::size_t unknown = n, unknowns = 0;
          for (std::size_t x = 0; x < n; ++x) {
            long c = s.m(a, b, x);
            if (c == 0)
              continue;
            if (d[x] < 0) {
              ++unknowns;
              unknown = x;
              unknown_coef = c;
            } else {
              rhs -= c * d[x];
            }
          }
          if (unknowns == 0) {
            if (rhs != 0)
              return false;
          } else if (unknowns == 1) {
            if (rhs < 0 || rhs % unknown_coef != 0 || rhs / unknown_coef > bound[unknown])
              return false;
            d[unknown] = rhs / unknown_coef;
            changed = true;
          } else if (rhs < 0) {
            return false;
          }
        }
      }
    }
    return true;
  }

  void run(std::vector<long> d) {
    if (found.size() >= limit || !propagate(d))
      return;
    auto it = std::find(d.begin(), d.end(), -1);
    if (it == d.end()) {
      found.push_back(d);
      return;
    }
    const std::size_t x = static_cast<std::size_t>(it - d.begin());
    for (long v = 0; v <= bound[x] && found.size() < limit; ++v) {
      auto next = d;
      next[x] = v;
      run(std::move(next));
    }
  }
};

} // namespace

std::vector<DegreeMap> degree_maps(const FusionSemiring &s, std::size_t limit) {
  const std::size_t n = s.size();
  DegreeSearch search{s, std::vector<long>(n, 0), limit, {}};
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      long row = 0;
      for (std::size_t z = 0; z < n; ++z)
        row += s.m(x, y, z);
      search.bound[x] = std::max(search.bound[x], row);
    }
  std::vector<long> d(n, -1);
  d[s.identity()] = 1;
  search.run(std::move(d));
  return search.found;
}

DegreeMap degree_map(const FusionSemiring &s) {
  auto maps = degree_maps(s, 1);
  if (maps.empty())
    throw Error(ErrorCode::NoDegreeMap, "the semiring admits no degree map");
  return maps.front();
}

Report verify_degree_uniqueness(const FusionSemiring &s) {
  auto maps = degree_maps(s, 2);
  if (maps.empty())
    return Report::fail("no degree map exists", {});
  if (maps.size() > 1) {
    Report r = Report::fail("two distinct degree maps", {});
    r.witness.assign(maps[1].begin(), maps[1].end());
    return r;
  }
  Report r = Report::pass();
  r.message = "unique degree map";
  r.witness.assign(maps[0].begin(), maps[0].end());
  return r;
}

// ---------------------------------------------------------------------------
// Enveloping ring
// ---------------------------------------------------------------------------

Element basis_element(const FusionSemiring &s, std::size_t x) {
  Element v(s.size());
  v[x] = Cyclotomic(1);
  return v;
}

Element multiply(const FusionSemiring &s, const Element &a, const Element &b) {
  const std::size_t n = s.size();
  if (a.size() != n || b.size() != n)
    throw Error(ErrorCode::InvalidArgument, "element has the wrong length");
  Element out(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].is_zero())
      continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (b[j].is_zero())
        continue;
      Cyclotomic ab = a[i] * b[j];
      for (std::size_t k = 0; k < n; ++k)
        if (long c = s.m(i, j, k))
          out[k] += Cyclotomic(c) * ab;
    }
  }
  return out;
}

Element rho_element(const FusionSemiring &s, const DegreeMap &d) {
  if (!s.conjugation())
    throw Error(ErrorCode::NotRigid, "rho needs a conjugation");
  const auto &c = *s.conjugation();
  Element rho(s.size());
  for (std::size_t x = 0; x < s.size(); ++x)
    rho[x] = Cyclotomic(d[c[x]]);
  return rho;
}

// ---------------------------------------------------------------------------
// Morphisms
// ---------------------------------------------------------------------------

Report check_morphism(const SemiringMorphism &n, const FusionSemiring &s, const FusionSemiring &s2) {
  const std::size_t a = s.size(), b = s2.size();
  if (n.size() != a)
    throw Error(ErrorCode::InvalidArgument, "morphism matrix has the wrong number of rows");
  for (const auto &row : n)
    if (row.size() != b)
      throw Error(ErrorCode::InvalidArgument, "morphism matrix has the wrong number of columns");
  for (std::size_t i = 0; i < a; ++i)
    for (std::size_t t = 0; t < b; ++t)
      if (n[i][t] < 0)
        return Report::fail("negative morphism entry", {long(i), long(t)});
  for (std::size_t s1 = 0; s1 < a; ++s1)
    for (std::size_t s2i = 0; s2i < a; ++s2i)
      for (std::size_t t = 0; t < b; ++t) {
        long left = 0, right = 0;
        for (std::size_t x = 0; x < a; ++x)
          left += s.m(s1, s2i, x) * n[x][t];
        for (std::size_t t1 = 0; t1 < b; ++t1) {
          if (n[s1][t1] == 0)
            continue;
          for (std::size_t t2 = 0; t2 < b; ++t2)
            right += s2.m(t1, t2, t) * n[s1][t1] * n[s2i][t2];
        }
        if (left != right)
          return Report::fail("Eq. (1) fails", {long(s1), long(s2i), long(t)});
      }
  return Report::pass();
}

SemiringMorphism identity_morphism(const FusionSemiring &s) {
  SemiringMorphism n(s.size(), std::vector<long>(s.size(), 0));
  for (std::size_t i = 0; i < s.size(); ++i)
    n[i][i] = 1;
  return n;
}

SemiringMorphism restriction_morphism(const CharacterTable &g, const CharacterTable &h) {
  const auto &hc = h.classes();
  std::vector<int> fusion(hc.size());
  for (std::size_t k = 0; k < hc.size(); ++k) {
    auto idx = g.group->index_of(h.group->element(hc.representatives[k]));
    if (!idx)
      throw Error(ErrorCode::InvalidArgument, "the second group is not a subgroup of the first");
    fusion[k] = g.classes().class_of[*idx];
  }
  SemiringMorphism n(g.size(), std::vector<long>(h.size(), 0));
  for (std::size_t chi = 0; chi < g.size(); ++chi) {
    ClassFunction res(hc.size());
    for (std::size_t k = 0; k < hc.size(); ++k)
      res[k] = g.irreducibles[chi][fusion[k]];
    for (std::size_t psi = 0; psi < h.size(); ++psi) {
      Cyclotomic v = inner_product(h, res, h.irreducibles[psi]);
      if (!v.is_nonneg_integer())
        throw Error(ErrorCode::Internal, "restriction multiplicity is not a nonnegative integer");
      n[chi][psi] = v.to_integer().get_si();
    }
  }
  return n;
}

// ---------------------------------------------------------------------------
// Spectra
// ---------------------------------------------------------------------------

namespace {

using modp::u64;

constexpr int kGenericOrder = 120;
constexpr int kGenericHalf = 3; // multisets of up to 3 roots per half
constexpr std::size_t kGenericLabels = 16;

std::vector<modp::Matrix> multiplication_operators(const FusionSemiring &s, u64 p) {
  const std::size_t n = s.size();
  std::vector<modp::Matrix> ops;
  for (std::size_t x = 0; x < n; ++x) {
    if (x == s.identity())
      continue;
    modp::Matrix m(n, modp::Vec(n, 0));
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z)
        m[y][z] = static_cast<u64>(s.m(x, y, z)) % p;
    ops.push_back(std::move(m));
  }
  return ops;
}

// Evaluation vectors v with v[identity] = 1, one per point.
std::vector<modp::Vec> evaluation_vectors(const FusionSemiring &s, const modp::Field &f, u64 seed) {
  const std::size_t n = s.size();
  if (n == 1)
    return {modp::Vec{1}};
  auto vecs = modp::common_eigenvectors(multiplication_operators(s, f.p()), f, seed);
  if (vecs.size() != n)
    throw Error(ErrorCode::NotSemisimple, "multiplication operators do not split into " +
                                              std::to_string(n) + " points");
  for (auto &v : vecs) {
    const u64 lead = v[s.identity()];
    if (lead == 0)
      throw Error(ErrorCode::NotSemisimple, "evaluation vanishes at the identity");
    const u64 inv = f.inv(lead);
    for (auto &x : v)
      x = f.mul(x, inv);
  }
  return vecs;
}

bool is_multiplicative(const FusionSemiring &s, const Spectrum &sp) {
  const std::size_t n = s.size();
  for (std::size_t c = 0; c < sp.size(); ++c) {
    if (!sp.values[s.identity()][c].is_one())
      return false;
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a; b < n; ++b) {
        Cyclotomic rhs;
        for (std::size_t x = 0; x < n; ++x)
          if (long m = s.m(a, b, x))
            rhs += Cyclotomic(m) * sp.values[x][c];
        if (sp.values[a][c] * sp.values[b][c] != rhs)
          return false;
      }
  }
  return true;
}

u64 large_prime(u64 modulus, std::size_t skip) {
  u64 p = modp::next_prime_congruent_one(modulus, u64{1} << 31);
  for (std::size_t i = 0; i < skip; ++i)
    p = modp::next_prime_congruent_one(modulus, p);
  return p;
}

Spectrum spectrum_from_origin(const FusionSemiring &s, const CharacterTable &t, const Config &config) {
  const PermGroup &g = *t.group;
  const int e = static_cast<int>(g.exponent());
  const std::size_t r = t.size();
  for (std::size_t attempt = 0; attempt < 3; ++attempt) {
    const u64 p = large_prime(static_cast<u64>(e), attempt);
    const modp::Field f(p);
    const u64 omega = modp::primitive_root_of_unity(p, static_cast<u64>(e));
    auto vecs = evaluation_vectors(s, f, config.seed + attempt);
    std::vector<modp::Vec> columns(r, modp::Vec(r));
    for (std::size_t c = 0; c < r; ++c)
      for (std::size_t x = 0; x < r; ++x)
        columns[c][x] = reduce_mod_p(t.irreducibles[x][c], p, e, omega);
    std::vector<char> used(r, 0);
    bool ok = true;
    for (const auto &v : vecs) {
      auto it = std::find(columns.begin(), columns.end(), v);
      if (it == columns.end() || used[it - columns.begin()]) {
        ok = false;
        break;
      }
      used[it - columns.begin()] = 1;
    }
    if (!ok)
      continue;
    Spectrum sp;
    sp.points = t.classes().names();
    sp.values.assign(r, std::vector<Cyclotomic>(r));
    for (std::size_t x = 0; x < r; ++x)
      for (std::size_t c = 0; c < r; ++c)
        sp.values[x][c] = t.irreducibles[x][c];
    if (!is_multiplicative(s, sp))
      throw Error(ErrorCode::Internal, "table columns are not ring homomorphisms");
    return sp;
  }
  throw Error(ErrorCode::Internal, "eigenvectors did not match the character table columns");
}

// Residues of sums of up to kGenericHalf roots zeta_120^j mapped to omega^j.
class RootSums {
public:
  RootSums(const modp::Field &f, u64 omega) : f_(f) {
    u64 w = 1;
    for (int j = 0; j < kGenericOrder; ++j) {
      pow_.push_back(w);
      w = f.mul(w, omega);
    }
    enumerate([&](const std::vector<int> &ms, u64 sum) {
      table_.emplace(sum, ms); // first (shortest) multiset wins
    });
  }

  std::optional<std::vector<int>> find(u64 target) const {
    std::optional<std::vector<int>> out;
    enumerate([&](const std::vector<int> &ms, u64 sum) {
      if (out)
        return;
      auto it = table_.find(f_.sub(target, sum));
      if (it == table_.end())
        return;
      std::vector<int> all = ms;
      all.insert(all.end(), it->second.begin(), it->second.end());
      out = std::move(all);
    });
    return out;
  }

private:
  // Nondecreasing exponent sequences by length, shortest first.
  template <typename F> void enumerate(F &&visit) const {
    std::vector<int> cur;
    for (int len = 0; len <= kGenericHalf; ++len)
      extend(cur, len, 0, 0, visit);
  }
  template <typename F> void extend(std::vector<int> &cur, int len, int from, u64 sum, F &visit) const {
    if (static_cast<int>(cur.size()) == len) {
      visit(cur, sum);
      return;
    }
    for (int j = from; j < kGenericOrder; ++j) {
      cur.push_back(j);
      extend(cur, len, j, f_.add(sum, pow_[j]), visit);
      cur.pop_back();
    }
  }

  const modp::Field &f_;
  std::vector<u64> pow_;
  std::unordered_map<u64, std::vector<int>> table_;
};

Spectrum generic_spectrum(const FusionSemiring &s, const Config &config) {
  const std::size_t n = s.size();
  if (n > kGenericLabels)
    throw Error(ErrorCode::InvalidArgument,
                "spectra of semirings without a character table are limited to " +
                    std::to_string(kGenericLabels) + " labels");
  for (std::size_t attempt = 0; attempt < 3; ++attempt) {
    const u64 p = large_prime(kGenericOrder, attempt);
    const modp::Field f(p);
    const u64 omega = modp::primitive_root_of_unity(p, kGenericOrder);
    auto vecs = evaluation_vectors(s, f, config.seed + attempt);
    RootSums sums(f, omega);
    Spectrum sp;
    sp.values.assign(n, std::vector<Cyclotomic>(vecs.size()));
    bool lifted = true;
    for (std::size_t c = 0; c < vecs.size() && lifted; ++c)
      for (std::size_t x = 0; x < n && lifted; ++x) {
        auto ms = sums.find(vecs[c][x]);
        if (!ms) {
          lifted = false;
          break;
        }
        std::vector<Rational> dense(kGenericOrder);
        for (int j : *ms)
          dense[j] += 1;
        sp.values[x][c] = Cyclotomic::from_dense(kGenericOrder, std::move(dense));
      }
    if (!lifted || !is_multiplicative(s, sp))
      continue;
    // Lexicographic columns under Cyclotomic::compare; the degree point, when
    // there is one, dominates every other column and comes first.
    std::vector<std::size_t> order(vecs.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      for (std::size_t x = 0; x < n; ++x) {
        int c = Cyclotomic::compare(sp.values[x][a], sp.values[x][b]);
        if (c != 0)
          return c < 0;
      }
      return false;
    });
    Spectrum sorted;
    sorted.values.assign(n, std::vector<Cyclotomic>(vecs.size()));
    for (std::size_t k = 0; k < order.size(); ++k) {
      sorted.points.push_back("P" + std::to_string(k + 1));
      for (std::size_t x = 0; x < n; ++x)
        sorted.values[x][k] = sp.values[x][order[k]];
    }
    return sorted;
  }
  throw Error(ErrorCode::NotSemisimple,
              "evaluation values are not sums of at most 6 roots of unity of order dividing 120");
}

} // namespace

Spectrum spectrum(const FusionSemiring &s, const Config &config) {
  if (!s.is_commutative())
    throw Error(ErrorCode::NotCommutative, "spectra are defined for commutative semirings");
  if (s.origin())
    return spectrum_from_origin(s, *s.origin(), config);
  return generic_spectrum(s, config);
}

nlohmann::ordered_json Spectrum::to_json(const FusionSemiring &s) const {
  nlohmann::ordered_json j;
  j["points"] = points;
  j["labels"] = s.labels();
  auto rows = nlohmann::ordered_json::array();
  for (const auto &row : values) {
    auto jr = nlohmann::ordered_json::array();
    for (const auto &v : row)
      jr.push_back(v.to_json());
    rows.push_back(std::move(jr));
  }
  j["values"] = std::move(rows);
  return j;
}

std::vector<int> induced_point_map(const SemiringMorphism &n, const FusionSemiring &s,
                                   const Spectrum &spec_s, const FusionSemiring &s2,
                                   const Spectrum &spec_s2) {
  std::vector<int> out;
  for (std::size_t c2 = 0; c2 < spec_s2.size(); ++c2) {
    std::vector<Cyclotomic> target(s.size());
    for (std::size_t x = 0; x < s.size(); ++x)
      for (std::size_t t = 0; t < s2.size(); ++t)
        if (n[x][t])
          target[x] += Cyclotomic(n[x][t]) * spec_s2.values[t][c2];
    int found = -1;
    for (std::size_t c = 0; c < spec_s.size() && found < 0; ++c) {
      bool match = true;
      for (std::size_t x = 0; x < s.size() && match; ++x)
        match = spec_s.values[x][c] == target[x];
      if (match)
        found = static_cast<int>(c);
    }
    if (found < 0)
      throw Error(ErrorCode::Internal, "no point of the source spectrum matches");
    out.push_back(found);
  }
  return out;
}

} // namespace chartwist
