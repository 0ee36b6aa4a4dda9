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
#ifndef CHARTWIST_PERM_GROUP_HPP
#define CHARTWIST_PERM_GROUP_HPP

#include "chartwist/config.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace chartwist {

/**
 * @brief A permutation of {0..degree-1}.
 *
 * Products compose left to right: (a * b)(x) = b(a(x)). Cycle notation in
 * and out of the library uses 1-based points.
 */
class Permutation {
public:
  Permutation() = default;
  /// Throws InvalidArgument unless images is a bijection.
  explicit Permutation(std::vector<int> images);

  static Permutation identity(std::size_t degree);
  /// Parses "(1 2 3)(4 5)"; "()" is the identity. Points beyond the largest
  /// one mentioned are fixed up to `degree` (0 = just large enough).
  static Permutation from_cycles(std::string_view text, std::size_t degree = 0);

  std::size_t degree() const { return images_.size(); }
  int operator[](std::size_t i) const { return images_[i]; }
  const std::vector<int> &images() const { return images_; }

  Permutation operator*(const Permutation &o) const;
  Permutation inverse() const;
  Permutation pow(long k) const;
  /// Same permutation on a larger point set.
  Permutation extended(std::size_t degree) const;

  bool is_identity() const;
  std::size_t order() const;
  std::size_t fixed_points() const;
  /// Sorted cycle lengths including fixed points.
  std::vector<int> cycle_type() const;
  std::string to_cycle_string() const;

  friend bool operator==(const Permutation &, const Permutation &) = default;
  friend bool operator<(const Permutation &a, const Permutation &b) {
    return a.images_ < b.images_;
  }

private:
  std::vector<int> images_;
};

struct PermutationHash {
  std::size_t operator()(const Permutation &p) const noexcept;
};

/// Conjugacy classes in canonical order: element order ascending, class size
/// descending, then lexicographically least representative.
struct ConjugacyClasses {
  std::vector<int> representatives; // element indices (each the lex-min of its class)
  std::vector<std::uint64_t> sizes;
  std::vector<int> element_orders;
  std::vector<int> class_of;              // element index -> class index
  std::vector<std::vector<int>> members;  // class index -> element indices
  std::vector<std::vector<int>> power_maps; // [k][class] = class of g^k, k = 0..exponent
  std::vector<int> inverse_class;

  std::size_t size() const { return representatives.size(); }
  /// ATLAS-like names: "1", "2A", "2B", "3A", ...
  std::vector<std::string> names() const;
};

/**
 * @brief A finite permutation group with its full element list.
 *
 * Elements are sorted by image arrays, so index 0 is the identity. Values are
 * immutable after construction and shared through GroupPtr.
 */
class PermGroup {
public:
  /// Throws OrderCapExceeded once the closure grows past order_cap.
  static PermGroup closure(std::vector<Permutation> generators,
                           std::uint64_t order_cap = Config{}.order_cap);

  std::size_t order() const { return elements_.size(); }
  std::size_t degree() const { return degree_; }
  const std::vector<Permutation> &generators() const { return generators_; }
  const std::vector<Permutation> &elements() const { return elements_; }
  const Permutation &element(int i) const { return elements_[i]; }
  /// Generator i as an element index.
  const std::vector<int> &generator_indices() const { return generator_indices_; }

  std::optional<int> index_of(const Permutation &p) const;
  int mul(int a, int b) const;
  int inv(int a) const { return inverses_[a]; }
  int pow(int a, long k) const;
  int conj(int g, int by) const { return mul(mul(inv(by), g), by); } // by^-1 g by
  int element_order(int a) const { return orders_[a]; }
  std::uint64_t exponent() const { return exponent_; }
  bool is_abelian() const;
  bool contains(const Permutation &p) const { return index_of(p).has_value(); }

  const ConjugacyClasses &classes() const { return classes_; }

private:
  PermGroup() = default;
  void build_classes();

  std::size_t degree_ = 0;
  std::vector<Permutation> generators_;
  std::vector<int> generator_indices_;
  std::vector<Permutation> elements_;
  std::unordered_map<Permutation, int, PermutationHash> index_;
  std::vector<int> table_; // multiplication table when small enough
  std::vector<int> inverses_;
  std::vector<int> orders_;
  std::uint64_t exponent_ = 1;
  ConjugacyClasses classes_;
};

using GroupPtr = std::shared_ptr<const PermGroup>;

GroupPtr make_group(std::vector<Permutation> generators,
                    std::uint64_t order_cap = Config{}.order_cap);

/**
 * Parses a group spec: S<n>, A<n>, C<n>, D<n> (n = order, even >= 4), Q8,
 * E2^<k>, or perm:<cycles>,<cycles>,... Throws ParseError (with position) or
 * UnknownName.
 */
GroupPtr named_group(std::string_view spec, std::uint64_t order_cap = Config{}.order_cap);

/// Conjugation of every point label by a permutation of the points.
GroupPtr relabel(const PermGroup &g, const Permutation &points);

/// Regular representation of a group given by its multiplication table.
GroupPtr group_from_table(const std::vector<std::vector<int>> &table, int identity);

/// Element-index map G -> H; a homomorphism when built by this module.
using GroupMap = std::vector<int>;

/// Extends generator images to a homomorphism G -> H if consistent.
std::optional<GroupMap> extend_homomorphism(const PermGroup &g, const std::vector<int> &images,
                                            const PermGroup &h);

/// All automorphisms (element maps), identity first. Throws OrderCapExceeded
/// above aut_cap.
std::vector<GroupMap> automorphisms(const PermGroup &g, std::uint64_t aut_cap = Config{}.aut_cap);

/// Inner automorphism x -> by^-1 x by.
GroupMap inner_automorphism(const PermGroup &g, int by);

/// Isomorphism G1 -> G2, if one exists. Optional class constraint: generator
/// images of G1 generator i must lie in class allowed_class[class_of(gen i)]
/// of G2 (and every class maps accordingly) when provided.
std::optional<GroupMap> find_isomorphism(const PermGroup &g1, const PermGroup &g2,
                                         std::uint64_t aut_cap = Config{}.aut_cap,
                                         const std::vector<int> *class_map = nullptr);

std::optional<GroupMap> is_isomorphic(const PermGroup &g1, const PermGroup &g2,
                                      std::uint64_t aut_cap = Config{}.aut_cap);

/// Sorted element indices of a subgroup of G.
using Subgroup = std::vector<int>;

Subgroup subgroup_closure(const PermGroup &g, const std::vector<int> &generators);
bool is_normal(const PermGroup &g, const Subgroup &h);
bool are_conjugate(const PermGroup &g, const Subgroup &a, const Subgroup &b);

/// Normal abelian subgroups ordered by (order, element list). Complete below
/// aut_cap; throws OrderCapExceeded above it.
std::vector<Subgroup> normal_abelian_subgroups(const PermGroup &g,
                                               std::uint64_t aut_cap = Config{}.aut_cap);

/// Right-coset action of G on H\G; one permutation per generator of G.
std::vector<Permutation> coset_action(const PermGroup &g, const Subgroup &h);

} // namespace chartwist

#endif
