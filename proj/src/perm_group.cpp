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
#include "chartwist/perm_group.hpp"

#include "chartwist/error.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_set>

namespace chartwist {

// ---------------------------------------------------------------------------
// Permutation
// ---------------------------------------------------------------------------

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<char> seen(images_.size(), 0);
  for (int x : images_) {
    if (x < 0 || static_cast<std::size_t>(x) >= images_.size() || seen[x])
      throw Error(ErrorCode::InvalidArgument, "images do not form a bijection");
    seen[x] = 1;
  }
}

Permutation Permutation::identity(std::size_t degree) {
  std::vector<int> img(degree);
  std::iota(img.begin(), img.end(), 0);
  Permutation p;
  p.images_ = std::move(img);
  return p;
}

namespace {

[[noreturn]] void parse_fail(std::size_t pos, const std::string &msg) {
  throw Error(ErrorCode::ParseError,
              "parse error at position " + std::to_string(pos) + ": " + msg);
}

// Parses one product of cycles starting at text[pos]; stops at ',' or end.
// Returns the cycles as 0-based point lists; `base` offsets error positions.
std::vector<std::vector<int>> parse_cycles(std::string_view text, std::size_t &pos,
                                           std::size_t base) {
  std::vector<std::vector<int>> cycles;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  };
  skip_ws();
  if (pos >= text.size() || text[pos] != '(')
    parse_fail(base + pos, "expected '('");
  while (pos < text.size() && text[pos] == '(') {
    ++pos;
    std::vector<int> cyc;
    for (;;) {
      skip_ws();
      if (pos >= text.size())
        parse_fail(base + pos, "unterminated cycle");
      if (text[pos] == ')') {
        ++pos;
        break;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[pos])))
        parse_fail(base + pos, std::string("unexpected character '") + text[pos] + "'");
      long v = 0;
      std::size_t start = pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        v = v * 10 + (text[pos] - '0');
        if (v > 100000)
          parse_fail(base + start, "point too large");
        ++pos;
      }
      if (v < 1)
        parse_fail(base + start, "points are 1-based");
      cyc.push_back(static_cast<int>(v - 1));
    }
    std::vector<int> sorted = cyc;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      parse_fail(base + pos - 1, "repeated point in cycle");
    cycles.push_back(std::move(cyc));
    skip_ws();
  }
  return cycles;
}

Permutation from_cycle_list(const std::vector<std::vector<int>> &cycles, std::size_t degree) {
  std::size_t need = degree;
  for (const auto &c : cycles)
    for (int x : c)
      need = std::max(need, static_cast<std::size_t>(x) + 1);
  Permutation acc = Permutation::identity(need);
  for (const auto &c : cycles) {
    std::vector<int> img(need);
    std::iota(img.begin(), img.end(), 0);
    for (std::size_t i = 0; i < c.size(); ++i)
      img[c[i]] = c[(i + 1) % c.size()];
    acc = acc * Permutation(std::move(img)); // disjoint cycles commute
  }
  return acc;
}

} // namespace

Permutation Permutation::from_cycles(std::string_view text, std::size_t degree) {
  std::size_t pos = 0;
  auto cycles = parse_cycles(text, pos, 0);
  if (pos != text.size())
    parse_fail(pos, "trailing characters");
  return from_cycle_list(cycles, degree);
}

Permutation Permutation::operator*(const Permutation &o) const {
  const std::size_t n = std::max(degree(), o.degree());
  std::vector<int> img(n);
  for (std::size_t x = 0; x < n; ++x) {
    int y = x < degree() ? images_[x] : static_cast<int>(x);
    img[x] = static_cast<std::size_t>(y) < o.degree() ? o.images_[y] : y;
  }
  Permutation p;
  p.images_ = std::move(img);
  return p;
}

Permutation Permutation::inverse() const {
  std::vector<int> img(degree());
  for (std::size_t x = 0; x < degree(); ++x)
    img[images_[x]] = static_cast<int>(x);
  Permutation p;
  p.images_ = std::move(img);
  return p;
}

Permutation Permutation::pow(long k) const {
  Permutation base = k < 0 ? inverse() : *this;
  unsigned long e = static_cast<unsigned long>(k < 0 ? -k : k);
  Permutation r = identity(degree());
  while (e) {
    if (e & 1)
      r = r * base;
    base = base * base;
    e >>= 1;
  }
  return r;
}

Permutation Permutation::extended(std::size_t n) const {
  if (n < degree())
    throw Error(ErrorCode::InvalidArgument, "cannot shrink a permutation");
  std::vector<int> img(n);
  std::iota(img.begin(), img.end(), 0);
  std::copy(images_.begin(), images_.end(), img.begin());
  Permutation p;
  p.images_ = std::move(img);
  return p;
}

bool Permutation::is_identity() const {
  for (std::size_t x = 0; x < degree(); ++x)
    if (images_[x] != static_cast<int>(x))
      return false;
  return true;
}

std::vector<int> Permutation::cycle_type() const {
  std::vector<int> lens;
  std::vector<char> seen(degree(), 0);
  for (std::size_t x = 0; x < degree(); ++x) {
    if (seen[x])
      continue;
    int len = 0;
    for (std::size_t y = x; !seen[y]; y = images_[y]) {
      seen[y] = 1;
      ++len;
    }
    lens.push_back(len);
  }
  std::sort(lens.begin(), lens.end());
  return lens;
}

std::size_t Permutation::order() const {
  std::size_t o = 1;
  for (int len : cycle_type())
    o = std::lcm(o, static_cast<std::size_t>(len));
  return o;
}

std::size_t Permutation::fixed_points() const {
  std::size_t c = 0;
  for (std::size_t x = 0; x < degree(); ++x)
    c += images_[x] == static_cast<int>(x);
  return c;
}

std::string Permutation::to_cycle_string() const {
  std::ostringstream os;
  std::vector<char> seen(degree(), 0);
  for (std::size_t x = 0; x < degree(); ++x) {
    if (seen[x] || images_[x] == static_cast<int>(x))
      continue;
    os << '(';
    bool first = true;
    for (std::size_t y = x; !seen[y]; y = images_[y]) {
      seen[y] = 1;
      os << (first ? "" : " ") << y + 1;
      first = false;
    }
    os << ')';
  }
  std::string s = os.str();
  return s.empty() ? "()" : s;
}

std::size_t PermutationHash::operator()(const Permutation &p) const noexcept {
  std::size_t h = p.degree();
  for (int x : p.images())
    h = h * 31 + static_cast<std::size_t>(x);
  return h;
}

// ---------------------------------------------------------------------------
// PermGroup
// ---------------------------------------------------------------------------

namespace {
constexpr std::size_t kTableLimit = 2048;
}

PermGroup PermGroup::closure(std::vector<Permutation> generators, std::uint64_t order_cap) {
  std::size_t degree = 1;
  for (const auto &g : generators)
    degree = std::max(degree, g.degree());
  PermGroup G;
  G.degree_ = degree;
  for (auto &g : generators)
    if (g.degree() != degree)
      g = g.extended(degree);
  G.generators_ = generators;

  std::unordered_set<Permutation, PermutationHash> seen;
  std::deque<Permutation> queue;
  Permutation id = Permutation::identity(degree);
  seen.insert(id);
  queue.push_back(id);
  while (!queue.empty()) {
    Permutation x = std::move(queue.front());
    queue.pop_front();
    for (const auto &g : generators) {
      Permutation y = x * g;
      if (seen.insert(y).second) {
        if (seen.size() > order_cap)
          throw Error(ErrorCode::OrderCapExceeded,
                      "group order exceeds the cap of " + std::to_string(order_cap));
        queue.push_back(std::move(y));
      }
    }
  }
  G.elements_.assign(seen.begin(), seen.end());
  std::sort(G.elements_.begin(), G.elements_.end());
  const int n = static_cast<int>(G.elements_.size());
  for (int i = 0; i < n; ++i)
    G.index_.emplace(G.elements_[i], i);
  for (const auto &g : generators)
    G.generator_indices_.push_back(G.index_.at(g));

  if (G.elements_.size() <= kTableLimit) {
    G.table_.resize(static_cast<std::size_t>(n) * n);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        G.table_[static_cast<std::size_t>(a) * n + b] =
            G.index_.at(G.elements_[a] * G.elements_[b]);
  }
  G.inverses_.resize(n);
  G.orders_.resize(n);
  for (int a = 0; a < n; ++a) {
    G.inverses_[a] = G.index_.at(G.elements_[a].inverse());
    G.orders_[a] = static_cast<int>(G.elements_[a].order());
    G.exponent_ = std::lcm(G.exponent_, static_cast<std::uint64_t>(G.orders_[a]));
  }
  G.build_classes();
  return G;
}

std::optional<int> PermGroup::index_of(const Permutation &p) const {
  Permutation q = p;
  if (q.degree() < degree_)
    q = q.extended(degree_);
  else if (q.degree() > degree_) {
    for (std::size_t x = degree_; x < q.degree(); ++x)
      if (q[x] != static_cast<int>(x))
        return std::nullopt;
    q = Permutation(std::vector<int>(q.images().begin(), q.images().begin() + degree_));
  }
  auto it = index_.find(q);
  if (it == index_.end())
    return std::nullopt;
  return it->second;
}

int PermGroup::mul(int a, int b) const {
  if (!table_.empty())
    return table_[static_cast<std::size_t>(a) * elements_.size() + b];
  return index_.at(elements_[a] * elements_[b]);
}

int PermGroup::pow(int a, long k) const {
  if (k < 0) {
    a = inv(a);
    k = -k;
  }
  int r = 0, base = a;
  while (k) {
    if (k & 1)
      r = mul(r, base);
    base = mul(base, base);
    k >>= 1;
  }
  return r;
}

bool PermGroup::is_abelian() const {
  for (int a : generator_indices_)
    for (int b : generator_indices_)
      if (mul(a, b) != mul(b, a))
        return false;
  return true;
}

void PermGroup::build_classes() {
  const int n = static_cast<int>(elements_.size());
  std::vector<int> cls(n, -1);
  std::vector<std::vector<int>> orbits;
  for (int x = 0; x < n; ++x) {
    if (cls[x] != -1)
      continue;
    const int id = static_cast<int>(orbits.size());
    std::vector<int> orbit{x};
    cls[x] = id;
    for (std::size_t i = 0; i < orbit.size(); ++i)
      for (int g : generator_indices_) {
        int y = conj(orbit[i], g);
        if (cls[y] == -1) {
          cls[y] = id;
          orbit.push_back(y);
        }
      }
    std::sort(orbit.begin(), orbit.end());
    orbits.push_back(std::move(orbit));
  }
  std::vector<int> perm(orbits.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::sort(perm.begin(), perm.end(), [&](int a, int b) {
    const auto &oa = orbits[a], &ob = orbits[b];
    if (orders_[oa[0]] != orders_[ob[0]])
      return orders_[oa[0]] < orders_[ob[0]];
    if (oa.size() != ob.size())
      return oa.size() > ob.size();
    return oa[0] < ob[0];
  });
  ConjugacyClasses &c = classes_;
  c = ConjugacyClasses{};
  c.class_of.assign(n, -1);
  for (std::size_t k = 0; k < perm.size(); ++k) {
    auto &orbit = orbits[perm[k]];
    c.representatives.push_back(orbit[0]);
    c.sizes.push_back(orbit.size());
    c.element_orders.push_back(orders_[orbit[0]]);
    for (int x : orbit)
      c.class_of[x] = static_cast<int>(k);
    c.members.push_back(std::move(orbit));
  }
  const std::size_t r = c.size();
  c.power_maps.assign(exponent_ + 1, std::vector<int>(r));
  for (std::uint64_t k = 0; k <= exponent_; ++k)
    for (std::size_t i = 0; i < r; ++i)
      c.power_maps[k][i] = c.class_of[pow(c.representatives[i], static_cast<long>(k))];
  c.inverse_class.resize(r);
  for (std::size_t i = 0; i < r; ++i)
    c.inverse_class[i] = c.class_of[inv(c.representatives[i])];
}

std::vector<std::string> ConjugacyClasses::names() const {
  std::vector<std::string> out;
  std::vector<int> used;
  for (std::size_t i = 0; i < size(); ++i) {
    int o = element_orders[i];
    if (o == 1) {
      out.push_back("1");
      continue;
    }
    if (used.size() <= static_cast<std::size_t>(o))
      used.resize(o + 1, 0);
    int k = used[o]++;
    std::string suffix;
    do {
      suffix.insert(suffix.begin(), static_cast<char>('A' + k % 26));
      k = k / 26 - 1;
    } while (k >= 0);
    out.push_back(std::to_string(o) + suffix);
  }
  return out;
}

GroupPtr make_group(std::vector<Permutation> generators, std::uint64_t order_cap) {
  return std::make_shared<const PermGroup>(PermGroup::closure(std::move(generators), order_cap));
}

// ---------------------------------------------------------------------------
// Catalog
// ---------------------------------------------------------------------------

namespace {

Permutation cycle_on(const std::vector<int> &pts, std::size_t degree) {
  std::vector<int> img(degree);
  std::iota(img.begin(), img.end(), 0);
  for (std::size_t i = 0; i < pts.size(); ++i)
    img[pts[i]] = pts[(i + 1) % pts.size()];
  return Permutation(std::move(img));
}

long parse_number(std::string_view s, std::size_t pos, std::string_view spec) {
  if (s.empty())
    parse_fail(pos, "expected a number in '" + std::string(spec) + "'");
  long v = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i])))
      parse_fail(pos + i, std::string("unexpected character '") + s[i] + "'");
    v = v * 10 + (s[i] - '0');
    if (v > 1000000)
      parse_fail(pos, "number too large");
  }
  return v;
}

std::vector<Permutation> quaternion_regular() {
  // Elements 1,-1,i,-i,j,-j,k,-k as (sign, unit) with unit 0..3 = 1,i,j,k.
  auto idx = [](int sign, int unit) { return unit * 2 + (sign < 0 ? 1 : 0); };
  // unit products: table[a][b] = (sign, unit)
  const int prod_unit[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  const int prod_sign[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
  auto right_mult = [&](int unit) {
    std::vector<int> img(8);
    for (int u = 0; u < 4; ++u)
      for (int s : {1, -1})
        img[idx(s, u)] = idx(s * prod_sign[u][unit], prod_unit[u][unit]);
    return Permutation(std::move(img));
  };
  return {right_mult(1), right_mult(2)};
}

} // namespace

GroupPtr named_group(std::string_view spec, std::uint64_t order_cap) {
  if (spec.empty())
    parse_fail(0, "empty group spec");
  if (spec.substr(0, 5) == "perm:") {
    std::vector<Permutation> gens;
    std::vector<std::vector<std::vector<int>>> all;
    std::size_t pos = 5;
    std::string_view body = spec;
    std::size_t degree = 1;
    for (;;) {
      auto cycles = parse_cycles(body, pos, 0);
      for (const auto &c : cycles)
        for (int x : c)
          degree = std::max(degree, static_cast<std::size_t>(x) + 1);
      all.push_back(std::move(cycles));
      if (pos == body.size())
        break;
      if (body[pos] != ',')
        parse_fail(pos, std::string("expected ',' but found '") + body[pos] + "'");
      ++pos;
    }
    for (const auto &c : all)
      gens.push_back(from_cycle_list(c, degree));
    return make_group(std::move(gens), order_cap);
  }
  if (spec == "Q8")
    return make_group(quaternion_regular(), order_cap);
  if (spec.substr(0, 3) == "E2^") {
    long k = parse_number(spec.substr(3), 3, spec);
    if (k < 1)
      parse_fail(3, "E2^k needs k >= 1");
    if ((1L << std::min(k, 40L)) > static_cast<long>(order_cap))
      throw Error(ErrorCode::OrderCapExceeded, "E2^" + std::to_string(k) + " exceeds the order cap");
    std::vector<Permutation> gens;
    for (long i = 0; i < k; ++i)
      gens.push_back(cycle_on({static_cast<int>(2 * i), static_cast<int>(2 * i + 1)},
                              static_cast<std::size_t>(2 * k)));
    return make_group(std::move(gens), order_cap);
  }
  const char kind = spec[0];
  if (kind != 'S' && kind != 'A' && kind != 'C' && kind != 'D')
    throw Error(ErrorCode::UnknownName, "unknown group name '" + std::string(spec) + "'");
  long n = parse_number(spec.substr(1), 1, spec);
  if (n < 1)
    parse_fail(1, "group parameter must be positive");
  std::vector<Permutation> gens;
  const std::size_t deg = static_cast<std::size_t>(n);
  switch (kind) {
  case 'S': {
    if (n > 12)
      throw Error(ErrorCode::OrderCapExceeded, "S" + std::to_string(n) + " exceeds the order cap");
    if (n >= 2) {
      std::vector<int> all(n);
      std::iota(all.begin(), all.end(), 0);
      gens.push_back(cycle_on({0, 1}, deg));
      if (n > 2)
        gens.push_back(cycle_on(all, deg));
    } else {
      gens.push_back(Permutation::identity(1));
    }
    break;
  }
  case 'A': {
    if (n > 12)
      throw Error(ErrorCode::OrderCapExceeded, "A" + std::to_string(n) + " exceeds the order cap");
    if (n < 3)
      gens.push_back(Permutation::identity(deg));
    for (int i = 2; i < n; ++i)
      gens.push_back(cycle_on({0, 1, i}, deg));
    break;
  }
  case 'C': {
    std::vector<int> all(n);
    std::iota(all.begin(), all.end(), 0);
    gens.push_back(n == 1 ? Permutation::identity(1) : cycle_on(all, deg));
    break;
  }
  case 'D': {
    if (n < 4 || n % 2 != 0)
      throw Error(ErrorCode::UnknownName,
                  "dihedral groups are D<n> with n the (even, >= 4) group order");
    const int m = static_cast<int>(n / 2);
    if (m == 2) {
      gens.push_back(Permutation::from_cycles("(1 2)(3 4)"));
      gens.push_back(Permutation::from_cycles("(1 3)(2 4)"));
    } else {
      std::vector<int> all(m);
      std::iota(all.begin(), all.end(), 0);
      gens.push_back(cycle_on(all, m));
      std::vector<int> refl(m);
      for (int i = 0; i < m; ++i)
        refl[i] = (m - i) % m;
      gens.push_back(Permutation(std::move(refl)));
    }
    break;
  }
  }
  return make_group(std::move(gens), order_cap);
}

GroupPtr relabel(const PermGroup &g, const Permutation &points) {
  Permutation p = points.extended(std::max(points.degree(), g.degree()));
  std::vector<Permutation> gens;
  for (const auto &x : g.generators())
    gens.push_back(p.inverse() * x.extended(p.degree()) * p);
  return make_group(std::move(gens));
}

GroupPtr group_from_table(const std::vector<std::vector<int>> &table, int identity) {
  const std::size_t n = table.size();
  std::vector<Permutation> gens;
  for (std::size_t g = 0; g < n; ++g) {
    if (static_cast<int>(g) == identity)
      continue;
    std::vector<int> img(n);
    for (std::size_t x = 0; x < n; ++x)
      img[x] = table[x][g];
    gens.push_back(Permutation(std::move(img)));
  }
  if (gens.empty())
    gens.push_back(Permutation::identity(std::max<std::size_t>(n, 1)));
  return make_group(std::move(gens));
}

// ---------------------------------------------------------------------------
// Homomorphisms and automorphisms
// ---------------------------------------------------------------------------

std::optional<GroupMap> extend_homomorphism(const PermGroup &g, const std::vector<int> &images,
                                            const PermGroup &h) {
  const auto &gens = g.generator_indices();
  GroupMap map(g.order(), -1);
  map[0] = 0;
  std::vector<int> queue{0};
  for (std::size_t i = 0; i < queue.size(); ++i) {
    int x = queue[i];
    for (std::size_t k = 0; k < gens.size(); ++k) {
      int y = g.mul(x, gens[k]);
      int my = h.mul(map[x], images[k]);
      if (map[y] == -1) {
        map[y] = my;
        queue.push_back(y);
      } else if (map[y] != my) {
        return std::nullopt;
      }
    }
  }
  return map;
}

namespace {

bool is_bijective(const GroupMap &m, std::size_t n) {
  if (m.size() != n)
    return false;
  std::vector<char> seen(n, 0);
  for (int y : m) {
    if (y < 0 || seen[y])
      return false;
    seen[y] = 1;
  }
  return true;
}

// Enumerates bijective homomorphisms g1 -> g2 via generator images.
// `visit` returns false to stop the search.
template <typename Visit>
void search_isomorphisms(const PermGroup &g1, const PermGroup &g2,
                         const std::vector<int> *class_map, Visit &&visit) {
  if (g1.order() != g2.order())
    return;
  const auto &gens = g1.generator_indices();
  const auto &c1 = g1.classes(), &c2 = g2.classes();
  std::vector<std::vector<int>> candidates(gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i) {
    int gc = c1.class_of[gens[i]];
    for (int y = 0; y < static_cast<int>(g2.order()); ++y) {
      int yc = c2.class_of[y];
      if (g2.element_order(y) != g1.element_order(gens[i]) || c2.sizes[yc] != c1.sizes[gc])
        continue;
      if (class_map && (*class_map)[gc] != yc)
        continue;
      candidates[i].push_back(y);
    }
  }
  std::vector<int> chosen(gens.size());
  bool stop = false;
  auto rec = [&](auto &&self, std::size_t i) -> void {
    if (stop)
      return;
    if (i == gens.size()) {
      auto map = extend_homomorphism(g1, chosen, g2);
      if (!map || !is_bijective(*map, g2.order()))
        return;
      if (class_map)
        for (std::size_t c = 0; c < c1.size(); ++c)
          if (c2.class_of[(*map)[c1.representatives[c]]] != (*class_map)[c])
            return;
      if (!visit(*map))
        stop = true;
      return;
    }
    for (int y : candidates[i]) {
      bool ok = true;
      for (std::size_t j = 0; j < i && ok; ++j)
        ok = g1.element_order(g1.mul(gens[j], gens[i])) ==
             g2.element_order(g2.mul(chosen[j], y));
      if (!ok)
        continue;
      chosen[i] = y;
      self(self, i + 1);
      if (stop)
        return;
    }
  };
  rec(rec, 0);
}

void check_cap(const PermGroup &g, std::uint64_t cap) {
  if (g.order() > cap)
    throw Error(ErrorCode::OrderCapExceeded,
                "group order " + std::to_string(g.order()) +
                    " exceeds the automorphism search cap of " + std::to_string(cap));
}

} // namespace

std::vector<GroupMap> automorphisms(const PermGroup &g, std::uint64_t aut_cap) {
  check_cap(g, aut_cap);
  std::vector<GroupMap> out;
  search_isomorphisms(g, g, nullptr, [&](const GroupMap &m) {
    out.push_back(m);
    return true;
  });
  std::sort(out.begin(), out.end());
  return out; // the identity map is lexicographically smallest
}

GroupMap inner_automorphism(const PermGroup &g, int by) {
  GroupMap m(g.order());
  for (int x = 0; x < static_cast<int>(g.order()); ++x)
    m[x] = g.conj(x, by);
  return m;
}

std::optional<GroupMap> find_isomorphism(const PermGroup &g1, const PermGroup &g2,
                                         std::uint64_t aut_cap,
                                         const std::vector<int> *class_map) {
  check_cap(g1, aut_cap);
  check_cap(g2, aut_cap);
  if (g1.order() != g2.order())
    return std::nullopt;
  // Element-order census is a cheap certificate of non-isomorphism.
  std::vector<int> o1, o2;
  for (std::size_t i = 0; i < g1.order(); ++i) {
    o1.push_back(g1.element_order(static_cast<int>(i)));
    o2.push_back(g2.element_order(static_cast<int>(i)));
  }
  std::sort(o1.begin(), o1.end());
  std::sort(o2.begin(), o2.end());
  if (o1 != o2)
    return std::nullopt;
  std::optional<GroupMap> found;
  search_isomorphisms(g1, g2, class_map, [&](const GroupMap &m) {
    found = m;
    return false;
  });
  return found;
}

std::optional<GroupMap> is_isomorphic(const PermGroup &g1, const PermGroup &g2,
                                      std::uint64_t aut_cap) {
  return find_isomorphism(g1, g2, aut_cap, nullptr);
}

// ---------------------------------------------------------------------------
// Subgroups
// ---------------------------------------------------------------------------

Subgroup subgroup_closure(const PermGroup &g, const std::vector<int> &generators) {
  std::vector<char> in(g.order(), 0);
  std::vector<int> elems{0};
  in[0] = 1;
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (int s : generators) {
      int y = g.mul(elems[i], s);
      if (!in[y]) {
        in[y] = 1;
        elems.push_back(y);
      }
    }
  std::sort(elems.begin(), elems.end());
  return elems;
}

bool is_normal(const PermGroup &g, const Subgroup &h) {
  std::vector<char> in(g.order(), 0);
  for (int x : h)
    in[x] = 1;
  for (int x : h)
    for (int s : g.generator_indices())
      if (!in[g.conj(x, s)])
        return false;
  return true;
}

bool are_conjugate(const PermGroup &g, const Subgroup &a, const Subgroup &b) {
  if (a.size() != b.size())
    return false;
  std::vector<char> in_b(g.order(), 0);
  for (int x : b)
    in_b[x] = 1;
  for (int by = 0; by < static_cast<int>(g.order()); ++by) {
    bool ok = true;
    for (int x : a)
      if (!in_b[g.conj(x, by)]) {
        ok = false;
        break;
      }
    if (ok)
      return true;
  }
  return false;
}

std::vector<Subgroup> normal_abelian_subgroups(const PermGroup &g, std::uint64_t aut_cap) {
  check_cap(g, aut_cap);
  struct Node {
    Subgroup elems;
    std::vector<int> gens;
  };
  std::set<Subgroup> seen;
  std::vector<Node> nodes;
  for (int x = 0; x < static_cast<int>(g.order()); ++x) {
    Subgroup c = subgroup_closure(g, {x});
    if (seen.insert(c).second)
      nodes.push_back({std::move(c), {x}});
  }
  // Cyclic extension: join commuting elements one at a time.
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    std::vector<char> in(g.order(), 0);
    for (int x : nodes[i].elems)
      in[x] = 1;
    for (int x = 0; x < static_cast<int>(g.order()); ++x) {
      if (in[x])
        continue;
      bool commutes = true;
      for (int s : nodes[i].gens)
        if (g.mul(x, s) != g.mul(s, x)) {
          commutes = false;
          break;
        }
      if (!commutes)
        continue;
      std::vector<int> gens = nodes[i].gens;
      gens.push_back(x);
      Subgroup k = subgroup_closure(g, gens);
      if (seen.insert(k).second)
        nodes.push_back({std::move(k), std::move(gens)});
    }
  }
  std::vector<Subgroup> out;
  for (const auto &n : nodes)
    if (is_normal(g, n.elems))
      out.push_back(n.elems);
  std::sort(out.begin(), out.end(), [](const Subgroup &a, const Subgroup &b) {
    if (a.size() != b.size())
      return a.size() < b.size();
    return a < b;
  });
  return out;
}

std::vector<Permutation> coset_action(const PermGroup &g, const Subgroup &h) {
  const int n = static_cast<int>(g.order());
  std::vector<int> coset(n, -1);
  std::vector<int> reps;
  for (int x = 0; x < n; ++x) {
    if (coset[x] != -1)
      continue;
    int id = static_cast<int>(reps.size());
    reps.push_back(x);
    for (int s : h)
      coset[g.mul(s, x)] = id;
  }
  std::vector<Permutation> out;
  for (int gen : g.generator_indices()) {
    std::vector<int> img(reps.size());
    for (std::size_t c = 0; c < reps.size(); ++c)
      img[c] = coset[g.mul(reps[c], gen)];
    out.emplace_back(std::move(img));
  }
  return out;
}

} // namespace chartwist
