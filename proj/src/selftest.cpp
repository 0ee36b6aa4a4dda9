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
#include "chartwist/selftest.hpp"

#include "chartwist/commands.hpp"
#include "chartwist/error.hpp"
#include "chartwist/semiring.hpp"
#include "chartwist/table_iso.hpp"
#include "chartwist/twist_lab.hpp"

#include <chrono>
#include <iomanip>
#include <random>
#include <sstream>

namespace chartwist {

namespace {

using Clock = std::chrono::steady_clock;

const std::vector<std::string> &catalog() {
  static const std::vector<std::string> names = {
      "S3", "S4",  "S5",  "S6",  "A4",  "A5",  "D4", "D6", "D8", "D10", "D12", "D14", "D16", "Q8",  "C2",
      "C3", "C4",  "C5",  "C6",  "C7",  "C8",  "C9", "C10", "C11", "C12", "E2^2", "E2^4"};
  return names;
}

std::vector<std::string> catalog_up_to(std::size_t order) {
  std::vector<std::string> out;
  for (const auto &n : catalog())
    if (named_group(n)->order() <= order)
      out.push_back(n);
  return out;
}

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string &what) {
    if (!ok) {
      if (!pass)
        detail << "; ";
      else
        detail.str("");
      pass = false;
      detail << what;
    }
  }
};

std::string seconds_text(double s) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(2) << s;
  return os.str();
}

// ---- 1 ---------------------------------------------------------------------

void golden_s4(Outcome &o, const Config &config) {
  const auto start = Clock::now();
  auto t = character_table(named_group("S4"), config);
  const double elapsed = std::chrono::duration<double>(Clock::now() - start).count();
  const std::vector<std::vector<int>> golden = {
      {1, 1, 1, 1, 1}, {1, -1, 1, 1, -1}, {2, 0, 2, -1, 0}, {3, 1, -1, 0, -1}, {3, -1, -1, 0, 1}};
  o.require(t.classes().names() == std::vector<std::string>{"1", "2A", "2B", "3A", "4A"}, "class names differ");
  bool rows = t.size() == 5;
  for (std::size_t i = 0; rows && i < 5; ++i)
    for (std::size_t c = 0; c < 5; ++c)
      rows = rows && t.irreducibles[i][c] == Cyclotomic(golden[i][c]);
  o.require(rows, "rows differ from the printed table");
  o.require(elapsed < 1.0, "took " + seconds_text(elapsed) + " s");
  if (o.pass)
    o.detail << "5 classes 1 2A 2B 3A 4A, rows exact, " << seconds_text(elapsed) << " s";
}

// ---- 2 ---------------------------------------------------------------------

void s4_automorphisms(Outcome &o, const Config &config) {
  const auto start = Clock::now();
  auto r = iso_command("S4", "S4", {true, true}, config);
  const double elapsed = std::chrono::duration<double>(Clock::now() - start).count();
  const auto &b = r.data["bijections"];
  o.require(b.size() == 2, std::to_string(b.size()) + " bijections");
  if (b.size() == 2) {
    o.require(b[0]["sigma"] == nlohmann::ordered_json({0, 1, 2, 3, 4}) && b[0]["group_induced"] == true,
              "first bijection is not the induced identity");
    o.require(b[1]["sigma"] == nlohmann::ordered_json({0, 1, 2, 4, 3}), "chi_4 and chi_5 not swapped");
    o.require(b[1]["tau"] == nlohmann::ordered_json({0, 4, 2, 3, 1}), "2A and 4A not swapped");
    o.require(b[1]["group_induced"] == false, "swap reported as group-induced");
  }
  o.require(elapsed < 5.0, "took " + seconds_text(elapsed) + " s");
  if (o.pass)
    o.detail << "2 bijections; chi_4<->chi_5, 2A<->4A not group-induced; " << seconds_text(elapsed) << " s";
}

// ---- 3 ---------------------------------------------------------------------

void d8_q8(Outcome &o, const Config &config) {
  const auto start = Clock::now();
  auto iso = iso_command("D8", "Q8", {false, true}, config);
  o.require(!iso.data["bijections"].empty(), "D8 and Q8 tables differ");
  o.require(iso.data["groups_isomorphic"] == false, "D8 and Q8 reported isomorphic");
  auto tw = twist_command("D8", {"auto", "symplectic", false}, config);
  const double elapsed = std::chrono::duration<double>(Clock::now() - start).count();
  const auto &gl = tw.data["group_likes"];
  o.require(tw.data["eq3_phi1"] == true, "eq3_phi1 false");
  o.require(tw.data["eq2_cocommutative"] == true, "twisted coproduct not cocommutative");
  if (gl.is_null()) {
    o.require(false, "no group-likes computed");
  } else {
    o.require(gl["order"] == 8, "G(F) has order " + gl["order"].dump());
    o.require(gl["involutions"] == 1, "G(F) has " + gl["involutions"].dump() + " involutions, expected 1");
    o.require(gl["isomorphic_to"] == "Q8", "G(F) is isomorphic to " + gl["isomorphic_to"].dump() + ", not Q8");
  }
  o.require(elapsed < 5.0, "took " + seconds_text(elapsed) + " s");
  if (o.pass)
    o.detail << "tables equal, groups non-isomorphic, G(F) = Q8";
}

// ---- 4 ---------------------------------------------------------------------

void orthogonality(Outcome &o, const Config &config) {
  for (const auto &name : catalog()) {
    auto g = named_group(name);
    auto t = character_table(g, config);
    const auto &cl = t.classes();
    const std::size_t r = t.size();
    const Cyclotomic order(static_cast<long>(g->order()));
    bool ok = true;
    for (std::size_t i = 0; i < r && ok; ++i)
      for (std::size_t j = 0; j < r && ok; ++j) {
        Cyclotomic s;
        for (std::size_t c = 0; c < r; ++c)
          s += Cyclotomic(static_cast<long>(cl.sizes[c])) * t.irreducibles[i][c] * t.irreducibles[j][c].conjugate();
        ok = s == (i == j ? order : Cyclotomic(0));
      }
    o.require(ok, "row orthogonality fails for " + name);
    ok = true;
    for (std::size_t c = 0; c < r && ok; ++c)
      for (std::size_t d = 0; d < r && ok; ++d) {
        Cyclotomic s;
        for (std::size_t i = 0; i < r; ++i)
          s += t.irreducibles[i][c] * t.irreducibles[i][d].conjugate();
        ok = s == (c == d ? Cyclotomic(Rational(static_cast<long>(g->order()), static_cast<long>(cl.sizes[c])))
                          : Cyclotomic(0));
      }
    o.require(ok, "column orthogonality fails for " + name);
  }
  for (const char *name : {"S4", "D8"}) {
    auto g = named_group(name);
    auto primes = admissible_primes(*g, 2);
    Config a = config, b = config;
    a.prime_override = primes[0];
    b.prime_override = primes[1];
    o.require(character_table(g, a).irreducibles == character_table(g, b).irreducibles,
              std::string("tables depend on the Dixon prime for ") + name);
  }
  if (o.pass)
    o.detail << catalog().size() << " groups, rows and columns exact; S4 and D8 prime-independent";
}

// ---- 5 ---------------------------------------------------------------------

void semiring_properties(Outcome &o, const Config &config) {
  for (const auto &name : catalog()) {
    auto s = fusion_constants(character_table(named_group(name), config));
    auto v = validate(s);
    o.require(v.ok, name + ": " + v.message);
    auto u = verify_degree_uniqueness(s);
    o.require(u.ok, name + ": degree map not unique");
    if (!u.ok || !v.ok)
      continue;
    auto d = degree_map(s);
    auto rho = rho_element(s, d);
    for (std::size_t x = 0; x < s.size(); ++x) {
      Element expect = rho;
      for (auto &c : expect)
        c *= Cyclotomic(d[x]);
      o.require(multiply(s, basis_element(s, x), rho) == expect, name + ": x rho != d(x) rho");
    }
    const auto &conj = *s.conjugation();
    bool rigid = true;
    for (std::size_t x = 0; x < s.size() && rigid; ++x)
      for (std::size_t y = 0; y < s.size() && rigid; ++y)
        for (std::size_t z = 0; z < s.size() && rigid; ++z)
          rigid = s.m(x, y, z) == s.m(conj[x], z, y);
    o.require(rigid, name + ": rigidity identity fails");
  }
  if (o.pass)
    o.detail << catalog().size() << " semirings: valid, unique degree map, rho, rigidity";
}

// ---- 6 ---------------------------------------------------------------------

void restriction_round_trip(Outcome &o, const Config &config) {
  auto t4 = character_table(named_group("S4"), config);
  auto t3 = character_table(named_group("S3"), config);
  auto s4 = fusion_constants(t4), s3 = fusion_constants(t3);
  auto res = restriction_morphism(t4, t3);
  auto m = check_morphism(res, s4, s3);
  o.require(m.ok, "Eq. (1) fails: " + m.message);
  auto sp4 = spectrum(s4, config), sp3 = spectrum(s3, config);
  auto fstar = induced_point_map(res, s4, sp4, s3, sp3);
  int exact = 0;
  for (std::size_t s = 0; s < s4.size(); ++s)
    for (std::size_t c = 0; c < s3.size(); ++c) {
      Cyclotomic v;
      for (std::size_t t = 0; t < s3.size(); ++t)
        v += Cyclotomic(res[s][t]) * sp3.values[t][c];
      exact += v == sp4.values[s][fstar[c]];
    }
  o.require(exact == 15, std::to_string(exact) + " of 15 pairs exact");
  // f* agrees with the class fusion of S3 inside S4
  auto g4 = t4.group;
  auto g3 = t3.group;
  for (std::size_t c = 0; c < t3.size(); ++c) {
    auto rep = g3->element(g3->classes().representatives[c]).extended(g4->degree());
    const int fused = g4->classes().class_of[*g4->index_of(rep)];
    o.require(fused == fstar[c], "f* differs from the class fusion");
  }
  if (o.pass)
    o.detail << "Eq. (1) holds; f* = class fusion; 15/15 pairs exact";
}

// ---- 7 ---------------------------------------------------------------------

void twist_equations(Outcome &o, const Config &config) {
  int twists = 0;
  std::ostringstream per_group;
  const std::vector<std::string> groups = {"D8", "Q8", "A4", "E2^2", "perm:(1 2 3),(4 5 6)"};
  const std::vector<TwoCocycle> cocycles = {symplectic_cocycle(1), heisenberg_cocycle(2), heisenberg_cocycle(3)};
  for (const auto &name : groups) {
    auto g = named_group(name);
    int here = 0;
    for (const auto &a : cocycles)
      for (const auto &sub : matching_subgroups(*g, a.m, a.rank)) {
        auto t = twist_from_cocycle(g, a, coordinate_basis(*g, sub, a.m, a.rank));
        o.require(check_dual_cocycle(t.f, Tensor::one(g, 3)).ok, "Eq. (3) fails in " + name);
        ++here;
      }
    twists += here;
    per_group << (per_group.tellp() > 0 ? " " : "") << (name.rfind("perm:", 0) == 0 ? "C3xC3" : name) << ":" << here;
  }
  // gauge transforms of the trivial associator
  std::mt19937_64 rng(config.seed);
  std::uniform_int_distribution<int> coef(-2, 2);
  int gauged = 0;
  for (const char *name : {"E2^2", "S3"}) {
    auto g = named_group(name);
    std::vector<Tensor> sums;
    for (const auto &members : g->classes().members) {
      Tensor k(g, 1);
      for (int x : members)
        k.add({x}, Cyclotomic(1));
      sums.push_back(k);
    }
    int here = 0;
    for (int attempt = 0; attempt < 200 && here < 20; ++attempt) {
      Tensor c = Tensor::one(g, 2).scaled(Cyclotomic(3));
      for (const auto &a : sums)
        for (const auto &b : sums)
          c = c + a.outer(b).scaled(Cyclotomic(coef(rng)));
      if (!c.inverse())
        continue;
      o.require(pentagon_check(gauge_associator(Tensor::one(g, 3), c)), std::string("pentagon fails over ") + name);
      ++here;
    }
    o.require(here == 20, std::string("too few invertible C over ") + name);
    gauged += here;
  }
  // single-value perturbations
  int perturbed = 0;
  auto check_perturbations = [&](const std::string &name, const TwoCocycle &base, const Cyclotomic &factor) {
    auto g = named_group(name);
    auto sub = matching_subgroups(*g, base.m, base.rank).front();
    auto basis = coordinate_basis(*g, sub, base.m, base.rank);
    const std::size_t n = base.size();
    for (std::size_t s = 1; s < n; ++s)
      for (std::size_t t = 1; t < n; ++t) {
        auto a = base;
        a.values[s * n + t] *= factor;
        auto tw = twist_from_cocycle(g, a, basis);
        o.require(!check_dual_cocycle(tw.f, Tensor::one(g, 3)).ok, "a perturbed cocycle passes Eq. (3)");
        ++perturbed;
      }
  };
  check_perturbations("E2^2", symplectic_cocycle(1), Cyclotomic(-1));
  check_perturbations("D8", symplectic_cocycle(1), Cyclotomic(-1));
  check_perturbations("perm:(1 2 3),(4 5 6)", heisenberg_cocycle(3), Cyclotomic::root_of_unity(3));
  if (o.pass)
    o.detail << "Eq. (3) for " << twists << " twists (" << per_group.str() << "); pentagon for " << gauged
             << " gauges; " << perturbed << " perturbations fail";
}

// ---- 8 ---------------------------------------------------------------------

void galois_suite(Outcome &o, const Config &config) {
  auto names = catalog_up_to(48);
  for (const auto &name : names) {
    auto g = named_group(name);
    auto rep = galois_check(function_algebra(g));
    o.require(rep.galois() && rep.theta_rank == g->order() * g->order(), "k(" + name + ") is not Galois");
    if (g->order() > 1)
      o.require(!galois_check(function_algebra_trivial(g)).galois(), "trivial action on k(" + name + ") is Galois");
  }
  auto d8 = named_group("D8");
  auto sub = matching_subgroups(*d8, 2, 2).front();
  auto t = twist_from_cocycle(d8, symplectic_cocycle(1), coordinate_basis(*d8, sub, 2, 2));
  auto r = dual_algebra(t);
  o.require(galois_check(r).galois(), "R_F is not Galois for D8");
  r.action = group_likes_action(t, group_likes(t, config));
  o.require(check_action(r).ok && galois_check(r).galois(), "R_F is not Galois for G(F)");
  if (o.pass)
    o.detail << names.size() << " function algebras Galois, trivial actions not; R_F bi-Galois";
}

// ---- 9 ---------------------------------------------------------------------

void section6(Outcome &o, const Config &config) {
  std::ostringstream notes;
  auto s4 = named_group("S4");
  auto t4 = character_table(s4, config);
  auto dec = decompose(t4, permutation_character(PermutationRepresentation::natural(s4)));
  o.require(dec == std::vector<Integer>{1, 0, 0, 1, 0}, "natural character of S4 is not chi_1 + chi_4");

  for (const auto &name : catalog_up_to(48)) {
    auto g = named_group(name);
    auto t = character_table(g, config);
    auto reg = decompose(t, permutation_character(PermutationRepresentation::regular(g)));
    bool ok = true;
    for (std::size_t i = 0; i < t.size(); ++i)
      ok = ok && reg[i] == t.degree(i);
    o.require(ok, "regular character of " + name + " is not sum d(chi) chi");
    const auto &cls = g->classes().class_of;
    bool inner = true;
    for (int by = 0; by < static_cast<int>(g->order()) && inner; ++by)
      for (int x = 0; x < static_cast<int>(g->order()) && inner; ++x)
        inner = cls[g->conj(x, by)] == cls[x];
    o.require(inner, "an inner automorphism of " + name + " moves a class");
  }

  // point stabilizer S5 and the transitive S5 = PGL(2,5) on the projective line
  auto s6 = named_group("S6");
  auto standard = subgroup_closure(*s6, {*s6->index_of(Permutation::from_cycles("(1 2 3 4 5)", 6)),
                                         *s6->index_of(Permutation::from_cycles("(1 2)", 6))});
  auto exotic = subgroup_closure(*s6, {*s6->index_of(Permutation::from_cycles("(1 2 3 4 5)", 6)),
                                       *s6->index_of(Permutation::from_cycles("(2 3 5 4)", 6)),
                                       *s6->index_of(Permutation::from_cycles("(1 6)(2 5)", 6))});
  o.require(standard.size() == 120 && exotic.size() == 120, "S5 subgroups have the wrong order");
  const bool conjugate = are_conjugate(*s6, standard, exotic);
  o.require(!conjugate, "the two S5 subgroups are conjugate");
  auto same = same_permutation_character(PermutationRepresentation::cosets(s6, standard),
                                         PermutationRepresentation::cosets(s6, exotic));
  o.require(same.ok, "S5 embeddings in S6: " + same.message + " (a transposition fixes 4 points of one action, 0 of "
                     "the other)");

  std::mt19937_64 rng(config.seed);
  int witnesses = 0;
  for (const char *name : {"D8", "S4"}) {
    auto g = named_group(name);
    std::uniform_int_distribution<int> pick(0, static_cast<int>(g->order()) - 1);
    for (int i = 0; i < 10; ++i) {
      auto w = class_preserving_twist_witness(g, inner_automorphism(*g, pick(rng)), config);
      o.require(w.f_invariant, std::string("Prop. 5 twist not invariant in ") + name);
      witnesses += w.f_invariant;
    }
  }
  if (o.pass)
    o.detail << "natural, regular and inner checks hold; S5 pair agrees; " << witnesses << " Prop. 5 witnesses";
  else
    o.detail << "; other checks: natural S4 = chi_1 + chi_4, regular characters, inner automorphisms, " << witnesses
             << "/20 Prop. 5 witnesses";
}

using Check = void (*)(Outcome &, const Config &);

struct Criterion {
  const char *title;
  Check run;
};

const Criterion kCriteria[] = {
    {"S4 golden table", golden_s4},
    {"S4 table automorphisms", s4_automorphisms},
    {"D8/Q8 tables and symplectic twist", d8_q8},
    {"orthogonality suite", orthogonality},
    {"semiring property suite", semiring_properties},
    {"restriction round trip S4 -> S3", restriction_round_trip},
    {"twist equation suite", twist_equations},
    {"Galois suite", galois_suite},
    {"class-preserving automorphisms and permutation characters", section6},
};

} // namespace

std::string CriterionResult::line() const {
  std::ostringstream os;
  os << (pass ? "[PASS] " : "[FAIL] ") << id << " " << title << " (" << seconds_text(seconds) << " s)";
  if (!detail.empty())
    os << ": " << detail;
  return os.str();
}

std::vector<CriterionResult> run_selftest(const Config &config,
                                          const std::function<void(const CriterionResult &)> &on_result) {
  std::vector<CriterionResult> out;
  const auto begin = Clock::now();
  int id = 0;
  for (const auto &c : kCriteria) {
    Outcome o;
    const auto start = Clock::now();
    try {
      c.run(o, config);
    } catch (const std::exception &e) {
      o.require(false, std::string("error: ") + e.what());
    }
    CriterionResult r{++id, c.title, o.pass, o.detail.str(),
                      std::chrono::duration<double>(Clock::now() - start).count()};
    if (on_result)
      on_result(r);
    out.push_back(std::move(r));
  }
  const double total = std::chrono::duration<double>(Clock::now() - begin).count();
  CriterionResult whole{++id, "full selftest under 120 s", total < 120.0,
                        "criteria 1-9 took " + seconds_text(total) + " s", total};
  if (on_result)
    on_result(whole);
  out.push_back(std::move(whole));
  return out;
}

} // namespace chartwist
