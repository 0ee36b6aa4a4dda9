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
#ifndef CHARTWIST_TWIST_LAB_HPP
#define CHARTWIST_TWIST_LAB_HPP

#include "chartwist/linalg.hpp"
#include "chartwist/semiring.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace chartwist {

/**
 * @brief Element of k[G]^{(x)arity} = k[G^arity].
 *
 * Basis tuples are encoded base |G| (first factor most significant). Arity 1
 * is the group algebra itself.
 */
class Tensor {
public:
  Tensor(GroupPtr g, int arity);
  static Tensor one(GroupPtr g, int arity);
  static Tensor basis(GroupPtr g, const std::vector<int> &elements);

  int arity() const { return arity_; }
  const GroupPtr &group() const { return group_; }
  const std::map<std::uint64_t, Cyclotomic> &terms() const { return terms_; }
  std::vector<int> decode(std::uint64_t code) const;
  std::uint64_t encode(const std::vector<int> &elements) const;

  Cyclotomic coefficient(const std::vector<int> &elements) const;
  void add(const std::vector<int> &elements, const Cyclotomic &c);
  bool is_zero() const { return terms_.empty(); }

  Tensor operator+(const Tensor &o) const;
  Tensor operator-(const Tensor &o) const;
  Tensor operator*(const Tensor &o) const;
  Tensor scaled(const Cyclotomic &c) const;
  friend bool operator==(const Tensor &a, const Tensor &b) { return a.arity_ == b.arity_ && a.terms_ == b.terms_; }

  /// a (x) b, arity a + b.
  Tensor outer(const Tensor &o) const;
  /// Coproduct g -> g (x) g applied to factor `slot`.
  Tensor coproduct_at(int slot) const;
  /// Factor permutation: result factor i is old factor order[i].
  Tensor permuted(const std::vector<int> &order) const;
  /// Two-sided inverse, solved inside the subalgebra spanned by the subgroup
  /// of G^arity generated by the support; nullopt if not invertible.
  std::optional<Tensor> inverse() const;

  std::string to_string() const;

private:
  GroupPtr group_;
  int arity_;
  std::map<std::uint64_t, Cyclotomic> terms_;
};

// ----- Hopf structure of k[G] -----------------------------------------------

Tensor coproduct(const Tensor &x);
Cyclotomic counit(const Tensor &x);
Tensor antipode(const Tensor &x);

struct NamedCheck {
  std::string name;
  bool ok;
};
/// Coassociativity, counit, antipode and multiplicativity of the coproduct on
/// every basis element (and basis pair).
std::vector<NamedCheck> hopf_axioms(GroupPtr g);

/// Primitive idempotents of k[A], A abelian: e_chi = (1/|A|) sum chi(a^-1) a.
std::vector<Tensor> abelian_idempotents(GroupPtr g, const Subgroup &a);

// ----- Cocycles ---------------------------------------------------------------

/// Normalized 2-cocycle on (Z/m)^rank; elements are base-m digit codes
/// (digit 0 least significant).
struct TwoCocycle {
  int m = 1;
  int rank = 0;
  std::vector<Cyclotomic> values; // values[s * size + t]

  std::size_t size() const;
  const Cyclotomic &operator()(std::size_t s, std::size_t t) const { return values[s * size() + t]; }
  std::vector<int> digits(std::size_t s) const;
  std::size_t add(std::size_t s, std::size_t t) const;
};

TwoCocycle symplectic_cocycle(int n);  // on F_2^{2n}
TwoCocycle heisenberg_cocycle(int m);  // on C_m + dual(C_m), m prime
TwoCocycle trivial_cocycle(int m, int rank);

Report is_cocycle(const TwoCocycle &a);
/// s -> (t -> a(s,t)/a(t,s)) is nontrivial for every s != 0.
Report is_nondegenerate(const TwoCocycle &a);

/// Generators b_1..b_r of S inside G with S = <b_1> x ... x <b_r>, each of
/// order m. Throws NoDualIdentification unless S is (Z/m)^r, NotAbelian if
/// S is not abelian.
std::vector<int> coordinate_basis(const PermGroup &g, const Subgroup &s, int m, int rank);

/// Normal abelian subgroups of G isomorphic to (Z/m)^rank.
std::vector<Subgroup> matching_subgroups(const PermGroup &g, int m, int rank);

/// Element of S with base-m coordinates u, S = <b_1> x ... x <b_r>.
int coordinate_element(const PermGroup &g, int m, const std::vector<int> &basis, std::size_t u);

/// e_s for every s in (Z/m)^r: the idempotent of the character
/// u -> zeta_m^{s.u} (dot product of coordinates).
std::vector<Tensor> coordinate_idempotents(GroupPtr g, int m, const std::vector<int> &basis);

struct TwistSource {
  TwoCocycle cocycle;
  std::vector<int> basis;
};

struct Twist {
  Tensor f;
  Tensor f_inv;
  std::optional<TwistSource> source; // set for twists built from a cocycle
};

/**
 * F = sum_{s,t} a(s,t) e_s (x) e_t with e_s the idempotent of the character
 * u -> zeta_m^{s.u} (dot product of coordinates) of S = image of basis.
 */
Twist twist_from_cocycle(GroupPtr g, const TwoCocycle &a, const std::vector<int> &basis);

/// Twist (F, F^-1) from an arbitrary invertible F; InvalidArgument otherwise.
Twist make_twist(const Tensor &f);

Tensor twisted_coproduct(const Twist &t, int g);
bool check_symmetric(const Tensor &f);
bool check_cocommutative(const Twist &t);

/// (1 (x) F)(I (x) D)(F) = (F (x) 1)(D (x) I)(F) Phi
Report check_dual_cocycle(const Tensor &f, const Tensor &phi);
/// Phi solved from Eq. (3).
Tensor associator(const Twist &t);
/// (Phi (x) 1)(I (x) D (x) I)(Phi)(1 (x) Phi) = (D (x) I (x) I)(Phi)(I (x) I (x) D)(Phi)
bool pentagon_check(const Tensor &phi);
/// (g (x) g) C = C (g (x) g) for all g.
bool is_invariant(const Tensor &c);
/// Phi^C = (D (x) I)(C)^-1 (C (x) 1)^-1 Phi (1 (x) C)(I (x) D)(C).
Tensor gauge_associator(const Tensor &phi, const Tensor &c);

// ----- Finite algebras ----------------------------------------------------------

/// Left action of a finite group (given by its multiplication table, identity
/// 0) on a finite algebra through basis images.
struct AlgebraAction {
  std::vector<std::vector<int>> table;
  std::vector<std::vector<SparseVec>> images; // images[g][i] = g(e_i)
  std::size_t order() const { return table.size(); }
};

struct FiniteAlgebra {
  std::size_t dim = 0;
  std::vector<SparseVec> products; // products[i * dim + j] = e_i e_j
  SparseVec unit;
  std::optional<AlgebraAction> action;

  const SparseVec &product(std::size_t i, std::size_t j) const { return products[i * dim + j]; }
  SparseVec multiply(const SparseVec &a, const SparseVec &b) const;
};

Report check_associative(const FiniteAlgebra &a);
Report check_unit(const FiniteAlgebra &a);
bool is_commutative(const FiniteAlgebra &a);
/// Every group element acts as an algebra automorphism and the action is a
/// group action.
Report check_action(const FiniteAlgebra &a);

/// k(G) with (g l)(x) = l(x g).
FiniteAlgebra function_algebra(GroupPtr g);
/// k(G) with the trivial action.
FiniteAlgebra function_algebra_trivial(GroupPtr g);
/// R_F = (k(G), mu_F) with the translation action of G.
FiniteAlgebra dual_algebra(const Twist &t);

struct GroupLikes {
  std::vector<Tensor> elements;        // identity first
  std::vector<std::vector<int>> table; // products in k[G]
  GroupPtr as_group() const;
};

/**
 * G(F) = {x : F D(x) = (x (x) x) F}.
 *
 * For a twist built from a cocycle on S every group-like has the form u g
 * with u in k[S] diagonal in the idempotents e_s, and u is found exactly
 * coset by coset. Other twists go through the characters of the dual of
 * D_F over a prime field, lifted by rational reconstruction. Every
 * candidate is verified exactly. NotCocommutative when D_F is not
 * cocommutative; NotSemisimple when fewer than |G| group-likes are found.
 */
GroupLikes group_likes(const Twist &t, const Config &config = Config{});

/// Catalog name of a group isomorphic to g among the small catalog, if any.
std::optional<std::string> identify_group(const PermGroup &g);

/// Action of G(F) on R_F: (x l)(y) = l(x^-1 y).
AlgebraAction group_likes_action(const Twist &t, const GroupLikes &gl);

/// R * G with (a * g)(b * f) = a g(b) * g f.
FiniteAlgebra cross_product(const FiniteAlgebra &r);

struct GaloisReport {
  bool theta_bijective = false;
  std::size_t dim = 0;
  std::size_t group_order = 0;
  std::size_t theta_rank = 0;
  bool semisimple = false;
  std::size_t center_dim = 0;
  std::size_t invariant_center_dim = 0; // number of G-orbits on central idempotents
  bool transitive = false;

  bool galois() const { return theta_bijective; }
  nlohmann::ordered_json to_json() const;
};

/// theta: R * G -> End(R), theta(a * g)(b) = a g(b).
GaloisReport galois_check(const FiniteAlgebra &r);

/// ind_S^G(B) = {a : G -> B, a(s g) = s(a(g))} with (f a)(g) = a(g f).
/// B's action is indexed by the positions of the elements of s.
FiniteAlgebra induced_algebra(const FiniteAlgebra &b, GroupPtr g, const Subgroup &s);

struct TwistWitness {
  Tensor c;
  Tensor c_inv;
  Tensor f; // D(c)^-1 (c (x) c)
  bool f_invariant = false;
};

/// Invertible c with phi(g) = c g c^-1 for all g; NotClassPreserving if the
/// solution space contains no invertible element within the search.
TwistWitness class_preserving_twist_witness(GroupPtr g, const GroupMap &phi, const Config &config = Config{});

} // namespace chartwist

#endif
