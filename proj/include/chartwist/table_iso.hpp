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
#ifndef CHARTWIST_TABLE_ISO_HPP
#define CHARTWIST_TABLE_ISO_HPP

#include "chartwist/semiring.hpp"

#include <optional>
#include <vector>

namespace chartwist {

/// T1[sigma[chi]][C] = T2[chi][tau[C]] for chi in Irr(G2), C in cl(G1).
struct TableBijection {
  std::vector<int> sigma; // rows of T2 -> rows of T1
  std::vector<int> tau;   // classes of G1 -> classes of G2

  friend bool operator==(const TableBijection &, const TableBijection &) = default;
};

/// Exact check of the defining identity.
bool is_table_bijection(const TableBijection &b, const CharacterTable &t1, const CharacterTable &t2);

/**
 * Every bijection between the tables, ordered by tau lexicographically (so the
 * identity comes first when T1 = T2). Uses table data only: class sizes,
 * column value multisets and partial row signatures. Throws
 * SearchBudgetExceeded after config.search_budget nodes.
 */
std::vector<TableBijection> find_table_isomorphisms(const CharacterTable &t1, const CharacterTable &t2,
                                                    const Config &config = Config{});

/// A group isomorphism G1 -> G2 inducing the class map tau, if one exists.
std::optional<GroupMap> is_group_induced(const TableBijection &b, const PermGroup &g1,
                                         const PermGroup &g2, std::uint64_t aut_cap = Config{}.aut_cap);

struct AutomorphismClassification {
  std::vector<GroupMap> automorphisms;      // identity first
  std::vector<std::size_t> inner;           // indices into automorphisms
  std::vector<std::size_t> class_preserving;
  std::vector<std::size_t> outer_class_preserving; // class-preserving, not inner
};

AutomorphismClassification class_preserving_automorphisms(const PermGroup &g,
                                                          std::uint64_t aut_cap = Config{}.aut_cap);

/// Homomorphism G -> S_n given by generator images; verified on construction.
class PermutationRepresentation {
public:
  /// Throws NotAHomomorphism when the images violate a relation of G.
  PermutationRepresentation(GroupPtr source, std::vector<Permutation> generator_images);

  static PermutationRepresentation natural(GroupPtr g);
  static PermutationRepresentation regular(GroupPtr g);
  static PermutationRepresentation cosets(GroupPtr g, const Subgroup &h);
  /// "natural", "regular" or "cosets:<cycles>,<cycles>,..." (subgroup generators).
  static PermutationRepresentation from_action(GroupPtr g, std::string_view action);

  const GroupPtr &source() const { return source_; }
  std::size_t degree() const { return degree_; }
  const std::vector<Permutation> &generator_images() const { return generator_images_; }
  const Permutation &image(int element) const { return element_images_[element]; }

private:
  GroupPtr source_;
  std::vector<Permutation> generator_images_;
  std::vector<Permutation> element_images_;
  std::size_t degree_ = 0;
};

/// chi(g) = number of points fixed by the image of g, per class.
ClassFunction permutation_character(const PermutationRepresentation &phi);

/// Multiplicities <chi_phi, chi> against the rows of a table of the source.
std::vector<Integer> decompose(const CharacterTable &t, const ClassFunction &f);

/**
 * Compares the permutation characters; when they agree and n <= 5, also
 * compares phi*(eta) and psi*(eta) on G for every irreducible eta of S_n.
 */
Report same_permutation_character(const PermutationRepresentation &phi,
                                  const PermutationRepresentation &psi);

} // namespace chartwist

#endif
