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
#ifndef CHARTWIST_SEMIRING_HPP
#define CHARTWIST_SEMIRING_HPP

#include "chartwist/char_table.hpp"

#include <optional>
#include <string>
#include <vector>

namespace chartwist {

/**
 * @brief A based semiring: labels S, nonnegative structure constants
 * m(x1, x2, x) = coefficient of x in x1 * x2, an identity and an optional
 * conjugation x -> x*.
 */
class FusionSemiring {
public:
  FusionSemiring() = default;
  explicit FusionSemiring(std::vector<std::string> labels);

  std::size_t size() const { return labels_.size(); }
  const std::vector<std::string> &labels() const { return labels_; }
  std::size_t identity() const { return identity_; }
  void set_identity(std::size_t e) { identity_ = e; }
  const std::optional<std::vector<int>> &conjugation() const { return conjugation_; }
  void set_conjugation(std::optional<std::vector<int>> c) { conjugation_ = std::move(c); }

  long m(std::size_t x1, std::size_t x2, std::size_t x) const { return c_[(x1 * size() + x2) * size() + x]; }
  void set(std::size_t x1, std::size_t x2, std::size_t x, long v) { c_[(x1 * size() + x2) * size() + x] = v; }

  bool is_commutative() const;

  /// Character table the semiring was built from, if any.
  const std::optional<CharacterTable> &origin() const { return origin_; }
  void set_origin(CharacterTable t) { origin_ = std::move(t); }

  /// Ingestion format: {"labels", "identity", "conjugation": perm | null,
  /// "constants": [[x1, x2, x, m], ...]} with 0-based indices.
  nlohmann::ordered_json to_json() const;
  static FusionSemiring from_json(const nlohmann::json &j);

private:
  std::vector<std::string> labels_;
  std::size_t identity_ = 0;
  std::optional<std::vector<int>> conjugation_;
  std::vector<long> c_;
  std::optional<CharacterTable> origin_;
};

/// Outcome of a check; `witness` holds the first failing index tuple.
struct Report {
  bool ok = true;
  std::string message;
  std::vector<long> witness;

  static Report pass() { return {}; }
  static Report fail(std::string msg, std::vector<long> w) { return {false, std::move(msg), std::move(w)}; }
};

/// Nonnegativity, identity, associativity and (when present) rigidity.
Report validate(const FusionSemiring &s);

/// m(chi, psi, eta) = <chi psi, eta>; conjugation from complex conjugation.
/// Labels are "chi1", "chi2", ... in table row order.
FusionSemiring fusion_constants(const CharacterTable &t);

using DegreeMap = std::vector<long>;

/**
 * All degree maps d with d(e) = 1 and d(x1) d(x2) = sum_x m(x1, x2, x) d(x).
 * Each d(x) is an eigenvalue of left multiplication by x with a nonnegative
 * eigenvector, so d(x) is bounded by the largest row sum of that operator;
 * the search is exhaustive under that bound. Stops after `limit` solutions.
 */
std::vector<DegreeMap> degree_maps(const FusionSemiring &s, std::size_t limit = 2);

/// The degree map; NoDegreeMap if none exists.
DegreeMap degree_map(const FusionSemiring &s);

/// Passes iff exactly one degree map exists.
Report verify_degree_uniqueness(const FusionSemiring &s);

/// Elements of the enveloping ring A(S) in the basis S.
using Element = std::vector<Cyclotomic>;

Element basis_element(const FusionSemiring &s, std::size_t x);
Element multiply(const FusionSemiring &s, const Element &a, const Element &b);

/// rho = sum_s d(s*) s; NotRigid without a conjugation.
Element rho_element(const FusionSemiring &s, const DegreeMap &d);

/// Integer matrix n[s][t] (s in S, t in S') describing s -> sum_t n[s][t] t.
using SemiringMorphism = std::vector<std::vector<long>>;

/// sum_s m(s1, s2, s) n[s][t] = sum_{t1, t2} m'(t1, t2, t) n[s1][t1] n[s2][t2].
Report check_morphism(const SemiringMorphism &n, const FusionSemiring &s, const FusionSemiring &s2);

SemiringMorphism identity_morphism(const FusionSemiring &s);

/// Restriction of characters from G to a subgroup H (H's points must be
/// elements of G): n[chi][psi] = <Res chi, psi>.
SemiringMorphism restriction_morphism(const CharacterTable &g, const CharacterTable &h);

/// Points of Cl(S) with evaluation values[x][c].
struct Spectrum {
  std::vector<std::string> points;
  std::vector<std::vector<Cyclotomic>> values; // label x point

  std::size_t size() const { return points.size(); }
  nlohmann::ordered_json to_json(const FusionSemiring &s) const;
};

/**
 * Common eigenvectors of the multiplication operators over a prime field,
 * lifted to cyclotomics. With a character table origin, points are the
 * conjugacy classes and the lift is matched against the table. Generic
 * semirings lift each value as a sum of d(x) roots of unity of order
 * dividing 120 (at most 16 labels, d(x) <= 6); everything is verified
 * exactly before returning.
 */
Spectrum spectrum(const FusionSemiring &s, const Config &config = Config{});

/// f*: Cl(S') -> Cl(S) with f(s)(c) = s(f*(c)); returns point indices.
std::vector<int> induced_point_map(const SemiringMorphism &n, const FusionSemiring &s,
                                   const Spectrum &spec_s, const FusionSemiring &s2,
                                   const Spectrum &spec_s2);

} // namespace chartwist

#endif
