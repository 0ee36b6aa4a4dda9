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
#include "chartwist/table_iso.hpp"

#include "chartwist/error.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <unordered_map>

namespace chartwist {

bool is_table_bijection(const TableBijection &b, const CharacterTable &t1, const CharacterTable &t2) {
  const std::size_t r = t1.size();
  if (t2.size() != r || b.sigma.size() != r || b.tau.size() != r)
    return false;
  for (std::size_t chi = 0; chi < r; ++chi)
    for (std::size_t c = 0; c < r; ++c)
      if (t1.irreducibles[b.sigma[chi]][c] != t2.irreducibles[chi][b.tau[c]])
        return false;
  return true;
}

namespace {

std::uint64_t mix(std::uint64_t h, std::uint64_t v) {
  h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h * 0xff51afd7ed558ccdULL;
}

class TableSearch {
public:
  TableSearch(const CharacterTable &t1, const CharacterTable &t2, std::uint64_t budget)
      : t1_(t1), t2_(t2), r_(t1.size()), budget_(budget) {
    std::unordered_map<Cyclotomic, int> ids;
    auto id_of = [&](const Cyclotomic &x) {
      auto [it, inserted] = ids.emplace(x, static_cast<int>(ids.size()));
      return it->second;
    };
    v1_.assign(r_, std::vector<int>(r_));
    v2_.assign(r_, std::vector<int>(r_));
    for (std::size_t a = 0; a < r_; ++a)
      for (std::size_t c = 0; c < r_; ++c) {
        v1_[a][c] = id_of(t1.irreducibles[a][c]);
        v2_[a][c] = id_of(t2.irreducibles[a][c]);
      }
    auto column_key = [&](const CharacterTable &t, const std::vector<std::vector<int>> &v, std::size_t c) {
      std::vector<std::uint64_t> key;
      for (std::size_t a = 0; a < r_; ++a)
        key.push_back(static_cast<std::uint64_t>(v[a][c]));
      std::sort(key.begin(), key.end());
      key.push_back(t.classes().sizes[c]);
      return key;
    };
    candidates_.resize(r_);
    for (std::size_t c = 0; c < r_; ++c) {
      auto k1 = column_key(t1, v1_, c);
      for (std::size_t d = 0; d < r_; ++d)
        if (column_key(t2, v2_, d) == k1)
          candidates_[c].push_back(static_cast<int>(d));
    }
    order_.resize(r_);
    std::iota(order_.begin(), order_.end(), 0);
    std::stable_sort(order_.begin(), order_.end(), [&](std::size_t a, std::size_t b) {
      return candidates_[a].size() < candidates_[b].size();
    });
  }

  std::vector<TableBijection> run() {
    std::vector<int> tau(r_, -1);
    std::vector<char> used(r_, 0);
    std::vector<std::uint64_t> h1(r_, 0), h2(r_, 0);
    dfs(0, tau, used, h1, h2);
    std::sort(results_.begin(), results_.end(),
              [](const TableBijection &a, const TableBijection &b) { return a.tau < b.tau; });
    return std::move(results_);
  }

private:
  void dfs(std::size_t depth, std::vector<int> &tau, std::vector<char> &used,
           const std::vector<std::uint64_t> &h1, const std::vector<std::uint64_t> &h2) {
    if (++nodes_ > budget_)
      throw Error(ErrorCode::SearchBudgetExceeded,
                  "table isomorphism search exceeded " + std::to_string(budget_) + " nodes");
    if (depth == r_) {
      finish(tau);
      return;
    }
    const std::size_t c = order_[depth];
    for (int d : candidates_[c]) {
      if (used[d])
        continue;
      // Forward check: multisets of partial row signatures must agree.
      std::vector<std::uint64_t> n1(r_), n2(r_);
      for (std::size_t a = 0; a < r_; ++a) {
        n1[a] = mix(h1[a], static_cast<std::uint64_t>(v1_[a][c]));
        n2[a] = mix(h2[a], static_cast<std::uint64_t>(v2_[a][d]));
      }
      auto s1 = n1, s2 = n2;
      std::sort(s1.begin(), s1.end());
      std::sort(s2.begin(), s2.end());
      if (s1 != s2)
        continue;
      tau[c] = d;
      used[d] = 1;
      dfs(depth + 1, tau, used, n1, n2);
      used[d] = 0;
      tau[c] = -1;
    }
  }

  void finish(const std::vector<int> &tau) {
    TableBijection b;
    b.tau = tau;
    b.sigma.assign(r_, -1);
    std::vector<char> taken(r_, 0);
    for (std::size_t chi = 0; chi < r_; ++chi) {
      for (std::size_t a = 0; a < r_ && b.sigma[chi] < 0; ++a) {
        if (taken[a])
          continue;
        bool match = true;
        for (std::size_t c = 0; c < r_ && match; ++c)
          match = v1_[a][c] == v2_[chi][tau[c]];
        if (match) {
          b.sigma[chi] = static_cast<int>(a);
          taken[a] = 1;
        }
      }
      if (b.sigma[chi] < 0)
        return;
    }
    if (!is_table_bijection(b, t1_, t2_))
      throw Error(ErrorCode::Internal, "table bijection failed exact verification");
    results_.push_back(std::move(b));
  }

  const CharacterTable &t1_, &t2_;
  std::size_t r_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  std::vector<std::vector<int>> v1_, v2_;
  std::vector<std::vector<int>> candidates_;
  std::vector<std::size_t> order_;
  std::vector<TableBijection> results_;
};

} // namespace

std::vector<TableBijection> find_table_isomorphisms(const CharacterTable &t1, const CharacterTable &t2,
                                                    const Config &config) {
  if (t1.size() != t2.size() || t1.group->order() != t2.group->order())
    return {};
  return TableSearch(t1, t2, config.search_budget).run();
}

std::optional<GroupMap> is_group_induced(const TableBijection &b, const PermGroup &g1,
                                         const PermGroup &g2, std::uint64_t aut_cap) {
  if (b.tau.size() != g1.classes().size())
    throw Error(ErrorCode::InvalidArgument, "bijection does not match the first group's classes");
  return find_isomorphism(g1, g2, aut_cap, &b.tau);
}

AutomorphismClassification class_preserving_automorphisms(const PermGroup &g, std::uint64_t aut_cap) {
  AutomorphismClassification out;
  out.automorphisms = automorphisms(g, aut_cap);
  std::set<GroupMap> inner;
  for (int by = 0; by < static_cast<int>(g.order()); ++by)
    inner.insert(inner_automorphism(g, by));
  const auto &class_of = g.classes().class_of;
  for (std::size_t i = 0; i < out.automorphisms.size(); ++i) {
    const auto &m = out.automorphisms[i];
    bool is_inner = inner.count(m) > 0;
    bool preserving = true;
    for (int x = 0; x < static_cast<int>(g.order()) && preserving; ++x)
      preserving = class_of[m[x]] == class_of[x];
    if (is_inner)
      out.inner.push_back(i);
    if (preserving)
      out.class_preserving.push_back(i);
    if (preserving && !is_inner)
      out.outer_class_preserving.push_back(i);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Permutation representations
// ---------------------------------------------------------------------------

PermutationRepresentation::PermutationRepresentation(GroupPtr source,
                                                     std::vector<Permutation> generator_images)
    : source_(std::move(source)), generator_images_(std::move(generator_images)) {
  const auto &gens = source_->generator_indices();
  if (generator_images_.size() != gens.size())
    throw Error(ErrorCode::InvalidArgument, "one image per generator is required");
  degree_ = 1;
  for (const auto &p : generator_images_)
    degree_ = std::max(degree_, p.degree());
  for (auto &p : generator_images_)
    p = p.extended(degree_);
  const std::size_t n = source_->order();
  element_images_.assign(n, Permutation());
  std::vector<char> done(n, 0);
  element_images_[0] = Permutation::identity(degree_);
  done[0] = 1;
  std::vector<int> queue{0};
  for (std::size_t i = 0; i < queue.size(); ++i) {
    const int x = queue[i];
    for (std::size_t k = 0; k < gens.size(); ++k) {
      const int y = source_->mul(x, gens[k]);
      Permutation img = element_images_[x] * generator_images_[k];
      if (!done[y]) {
        done[y] = 1;
        element_images_[y] = std::move(img);
        queue.push_back(y);
      } else if (!(element_images_[y] == img)) {
        throw Error(ErrorCode::NotAHomomorphism,
                    "generator images do not define a homomorphism");
      }
    }
  }
}

PermutationRepresentation PermutationRepresentation::natural(GroupPtr g) {
  auto gens = g->generators();
  return PermutationRepresentation(std::move(g), std::move(gens));
}

PermutationRepresentation PermutationRepresentation::regular(GroupPtr g) {
  std::vector<Permutation> images;
  const int n = static_cast<int>(g->order());
  for (int s : g->generator_indices()) {
    std::vector<int> img(n);
    for (int x = 0; x < n; ++x)
      img[x] = g->mul(x, s);
    images.emplace_back(std::move(img));
  }
  return PermutationRepresentation(std::move(g), std::move(images));
}

PermutationRepresentation PermutationRepresentation::cosets(GroupPtr g, const Subgroup &h) {
  auto images = coset_action(*g, h);
  return PermutationRepresentation(std::move(g), std::move(images));
}

PermutationRepresentation PermutationRepresentation::from_action(GroupPtr g, std::string_view action) {
  if (action == "natural")
    return natural(std::move(g));
  if (action == "regular")
    return regular(std::move(g));
  if (action.substr(0, 7) == "cosets:") {
    auto sub = named_group("perm:" + std::string(action.substr(7)));
    std::vector<int> gens;
    for (const auto &p : sub->generators()) {
      auto idx = g->index_of(p);
      if (!idx)
        throw Error(ErrorCode::InvalidArgument,
                    "subgroup generator " + p.to_cycle_string() + " is not in the group");
      gens.push_back(*idx);
    }
    return cosets(g, subgroup_closure(*g, gens));
  }
  throw Error(ErrorCode::UnknownName, "unknown action '" + std::string(action) +
                                          "' (natural, regular or cosets:<generators>)");
}

ClassFunction permutation_character(const PermutationRepresentation &phi) {
  const auto &cl = phi.source()->classes();
  ClassFunction out(cl.size());
  for (std::size_t k = 0; k < cl.size(); ++k)
    out[k] = Cyclotomic(static_cast<long>(phi.image(cl.representatives[k]).fixed_points()));
  return out;
}

std::vector<Integer> decompose(const CharacterTable &t, const ClassFunction &f) {
  std::vector<Integer> out;
  for (const auto &row : t.irreducibles)
    out.push_back(inner_product(t, f, row).to_integer());
  return out;
}

Report same_permutation_character(const PermutationRepresentation &phi,
                                  const PermutationRepresentation &psi) {
  if (phi.source()->order() != psi.source()->order() ||
      !(phi.source()->elements() == psi.source()->elements()))
    throw Error(ErrorCode::InvalidArgument, "representations have different source groups");
  if (phi.degree() != psi.degree())
    return Report::fail("degrees differ", {long(phi.degree()), long(psi.degree())});
  auto a = permutation_character(phi), b = permutation_character(psi);
  for (std::size_t k = 0; k < a.size(); ++k)
    if (a[k] != b[k])
      return Report::fail("permutation characters differ", {long(k)});
  Report r = Report::pass();
  r.message = "permutation characters agree";
  const std::size_t n = phi.degree();
  if (n > 5)
    return r;
  auto sn = named_group("S" + std::to_string(n));
  auto table = character_table(sn);
  const auto &cl = phi.source()->classes();
  for (std::size_t k = 0; k < cl.size(); ++k) {
    const int g = cl.representatives[k];
    const int ca = sn->classes().class_of[sn->index_of(phi.image(g)).value()];
    const int cb = sn->classes().class_of[sn->index_of(psi.image(g)).value()];
    for (std::size_t eta = 0; eta < table.size(); ++eta)
      if (table.irreducibles[eta][ca] != table.irreducibles[eta][cb])
        return Report::fail("induced maps on R(S_n) differ", {long(eta), long(k)});
  }
  r.message = "permutation characters and induced maps on R(S_n) agree";
  return r;
}

} // namespace chartwist
