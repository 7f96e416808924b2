#pragma once

#include <string>
#include <vector>

#include "mumford/abelian.hpp"
#include "mumford/common.hpp"

namespace mumford {

// Bijection of {0, ..., degree-1}.
class Permutation {
public:
  Permutation() = default;
  explicit Permutation(std::vector<int> images);
  static Permutation identity(int degree);
  // Cycles use 1-based point names, e.g. {{1,2},{3,4,5}}.
  static Permutation from_cycles(int degree, const std::vector<std::vector<int>>& cycles);

  int degree() const { return static_cast<int>(images_.size()); }
  int apply(int x) const { return images_[static_cast<size_t>(x)]; }
  Permutation inverse() const;
  bool is_identity() const;
  std::string cycle_string() const; // "(1 2)(3 4 5)", identity -> "()"

  bool operator==(const Permutation& o) const = default;
  bool operator<(const Permutation& o) const { return images_ < o.images_; }

private:
  std::vector<int> images_;
};

// (a * b)(x) = a(b(x))
Permutation compose(const Permutation& a, const Permutation& b);

// Finite group as a dense multiplication table over element indices.
class FiniteGroup {
public:
  FiniteGroup() = default;
  // Table entry table[a][b] = index of a*b.  Axioms are verified (full
  // associativity for order <= 256).
  static FiniteGroup from_table(std::vector<std::vector<int>> table, std::vector<std::string> labels = {});
  static FiniteGroup trivial();
  static FiniteGroup cyclic(int64_t n); // labels "0".."n-1"
  static FiniteGroup symmetric(int n);  // permutations of n points, cycle labels
  static FiniteGroup dihedral(int n);   // order 2n acting on n points (n >= 3)
  static FiniteGroup from_permutations(const std::vector<Permutation>& gens, const Budget& budget = {});

  int order() const { return order_; }
  int identity() const { return id_; }
  int mul(int a, int b) const { return table_[static_cast<size_t>(a) * order_ + b]; }
  int inv(int a) const { return inv_[static_cast<size_t>(a)]; }
  int conjugate(int g, int x) const { return mul(mul(g, x), inv(g)); } // g x g^-1
  int commutator(int a, int b) const { return mul(mul(a, b), mul(inv(a), inv(b))); }
  int64_t element_order(int a) const;
  bool is_abelian() const;

  const std::string& label(int a) const { return labels_[static_cast<size_t>(a)]; }
  int element_by_label(const std::string& s) const; // -1 if absent

  bool has_permutations() const { return !perms_.empty(); }
  const Permutation& permutation(int a) const { return perms_[static_cast<size_t>(a)]; }

  // Sorted element list of the subgroup generated by gens.
  std::vector<int> generated_subgroup(const std::vector<int>& gens) const;
  // Greedy generating set (deterministic, not guaranteed minimal).
  std::vector<int> small_generating_set() const;
  std::vector<std::vector<int>> conjugacy_classes() const; // each class sorted, classes by min element

  bool operator==(const FiniteGroup& o) const { return table_ == o.table_; }

private:
  int order_ = 0;
  int id_ = 0;
  std::vector<int> table_;
  std::vector<int> inv_;
  std::vector<std::string> labels_;
  std::vector<Permutation> perms_; // faithful permutation images when available
};

std::vector<int64_t> element_order_multiset(const FiniteGroup& g); // sorted
bool is_cyclic_group(const FiniteGroup& g);
// Order 2n with a cyclic index-2 subgroup inverted by an involution outside it.
bool is_dihedral_group(const FiniteGroup& g);
// Exhaustive generator-image search (guarded by an image-tuple budget).
bool groups_isomorphic(const FiniteGroup& a, const FiniteGroup& b);

// Action of W on T by additive automorphisms, stored per element as integer
// matrices on T's coordinates.
class GAction {
public:
  GAction() = default;
  GAction(FiniteGroup w, FinAbGroup t, std::vector<IntMatrix> matrices); // validates
  static GAction trivial(FiniteGroup w, FinAbGroup t);
  static GAction inversion(FiniteGroup w, FinAbGroup t);       // |W| = 2
  static GAction coordinate_swap(FiniteGroup w, FinAbGroup t); // |W| = 2, swaps the two halves
  static GAction coordinate_permutation(FiniteGroup w, FinAbGroup t); // W permutes T's coordinates
  static GAction even_ones(FiniteGroup w, FinAbGroup t); // basis u_i = e_i + e_n of the even part of (Z/2)^n
  // Images on a generating set; everything else by multiplicativity.
  static GAction from_generator_matrices(FiniteGroup w, FinAbGroup t, const std::vector<int>& gens,
                                         const std::vector<IntMatrix>& mats);

  const FiniteGroup& group() const { return w_; }
  const FinAbGroup& coeff() const { return t_; }
  const IntMatrix& matrix(int w) const { return mats_[static_cast<size_t>(w)]; }
  std::vector<int64_t> apply(int w, const std::vector<int64_t>& x) const { return t_.apply_matrix(mats_[static_cast<size_t>(w)], x); }
  bool is_trivial() const;
  bool same_action_as(const GAction& o) const;

private:
  FiniteGroup w_;
  FinAbGroup t_;
  std::vector<IntMatrix> mats_;
};

} // namespace mumford
