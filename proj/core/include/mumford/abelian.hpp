#pragma once

#include <string>
#include <vector>

#include "mumford/int_matrix.hpp"

namespace mumford {

// Finite abelian group presented as Z/e_1 x ... x Z/e_d with each e_j >= 1.
// Elements are coordinate vectors reduced into [0, e_j).
class FinAbGroup {
public:
  FinAbGroup() = default;
  explicit FinAbGroup(std::vector<int64_t> orders);
  static FinAbGroup cyclic(int64_t n) { return FinAbGroup({n}); }
  static FinAbGroup trivial() { return FinAbGroup(std::vector<int64_t>{}); }

  int rank() const { return static_cast<int>(orders_.size()); }
  const std::vector<int64_t>& orders() const { return orders_; }
  int64_t order() const;

  std::vector<int64_t> zero() const { return std::vector<int64_t>(orders_.size(), 0); }
  std::vector<int64_t> reduce(const std::vector<int64_t>& x) const;
  std::vector<int64_t> add(const std::vector<int64_t>& a, const std::vector<int64_t>& b) const;
  std::vector<int64_t> sub(const std::vector<int64_t>& a, const std::vector<int64_t>& b) const;
  std::vector<int64_t> neg(const std::vector<int64_t>& a) const;
  std::vector<int64_t> scale(int64_t c, const std::vector<int64_t>& a) const;
  bool is_zero(const std::vector<int64_t>& a) const;
  int64_t element_order(const std::vector<int64_t>& a) const;

  // Mixed-radix bijection with [0, order()); index 0 is the zero element.
  int64_t index_of(const std::vector<int64_t>& x) const;
  std::vector<int64_t> element_at(int64_t index) const;

  // Apply an integer matrix (entries act on coordinates) and reduce.
  std::vector<int64_t> apply_matrix(const IntMatrix& m, const std::vector<int64_t>& x) const;

  std::string describe() const; // "Z/2 x Z/4"

  bool operator==(const FinAbGroup& o) const = default;

private:
  std::vector<int64_t> orders_;
};

// Subgroup of a product P = prod Z/e_j, stored with Smith-reduced independent
// generators: every element is a unique combination sum c_k g_k, 0 <= c_k < d_k.
class ProductSubgroup {
public:
  ProductSubgroup() = default; // trivial subgroup of the trivial group
  // Subgroup generated by `gens` inside `ambient`.
  ProductSubgroup(FinAbGroup ambient, const std::vector<std::vector<int64_t>>& gens);
  static ProductSubgroup full(const FinAbGroup& ambient);
  static ProductSubgroup zero(FinAbGroup ambient) { return ProductSubgroup(std::move(ambient), {}); }

  const FinAbGroup& ambient() const { return ambient_; }
  const std::vector<std::vector<int64_t>>& generators() const { return gens_; }
  const std::vector<int64_t>& generator_orders() const { return gen_orders_; }
  int64_t order() const;

  bool contains(const std::vector<int64_t>& x) const;
  // Combination coordinates of x in terms of generators(); throws if absent.
  std::vector<int64_t> coordinates(const std::vector<int64_t>& x) const;
  // All elements in coordinate lex order of the combination vector; throws
  // BudgetError past `limit`.
  std::vector<std::vector<int64_t>> elements(int64_t limit = 1'000'000) const;
  std::vector<int64_t> element_at(int64_t index) const;
  // Sum of coords[k] * generators()[k] in the ambient group.
  std::vector<int64_t> combine(const std::vector<int64_t>& coords) const;

  bool same_subgroup_as(const ProductSubgroup& other) const;

private:
  FinAbGroup ambient_;
  std::vector<std::vector<int64_t>> gens_; // Smith-reduced, independent
  std::vector<int64_t> gen_orders_;        // exact orders, each dividing the next
  IntMatrix u_m_;                          // U of SNF([gens | diag(e)])
  std::vector<int64_t> lattice_factors_;   // its invariant factors (basis scales)
  IntMatrix u_c_;                          // U of SNF(relation matrix)
  std::vector<int64_t> deltas_;            // all relation invariant factors
  std::vector<int> kept_;                  // relation positions with delta > 1
};

// Quotient P / S presented as a finite abelian group with an explicit
// projection and a transversal of class representatives.
class ProductQuotient {
public:
  ProductQuotient() = default;
  ProductQuotient(FinAbGroup ambient, const ProductSubgroup& sub);

  const FinAbGroup& ambient() const { return ambient_; }
  const FinAbGroup& group() const { return quotient_; } // coordinates of classes
  int64_t order() const { return quotient_.order(); }

  std::vector<int64_t> project(const std::vector<int64_t>& x) const;
  // Representative lifting project(): project(representative(c)) == c.
  std::vector<int64_t> representative(const std::vector<int64_t>& cls) const;

private:
  FinAbGroup ambient_;
  FinAbGroup quotient_;
  IntMatrix u_, u_inv_;         // base change from the SNF of [gens | diag(e)]
  std::vector<int64_t> deltas_; // all invariant factors (length = ambient rank)
  std::vector<int> kept_;       // positions with delta > 1
};

// Congruence system  A x = rhs  with x_j in Z/src_j and row i read mod tgt_i.
// Rows with tgt_i = 0 would be genuine integer equations; all uses here have
// finite targets.
struct LinearSystem {
  IntMatrix a;
  std::vector<int64_t> src_orders;
  std::vector<int64_t> tgt_orders;

  void validate() const;
};

// Solutions of the homogeneous system as a subgroup of prod Z/src_j.
ProductSubgroup solve_homogeneous(const LinearSystem& sys);

struct AffineSolutionSet {
  bool empty = true;
  std::vector<int64_t> particular;  // one solution when nonempty
  ProductSubgroup homogeneous;      // full solution set = particular + homogeneous

  int64_t order() const { return empty ? 0 : homogeneous.order(); }
  bool contains(const std::vector<int64_t>& x) const;
  std::vector<std::vector<int64_t>> elements(int64_t limit = 1'000'000) const;
};

AffineSolutionSet solve_system(const LinearSystem& sys, const std::vector<int64_t>& rhs);

// Block systems over a coefficient group T: unknowns are n_unknowns elements
// of T, row i demands sum_j m(i,j) * x_j = rhs_i in T.  Expanded to the scalar
// system coordinate-by-coordinate.
LinearSystem block_system(const IntMatrix& m, const FinAbGroup& t);
std::vector<int64_t> flatten(const std::vector<std::vector<int64_t>>& xs);
std::vector<std::vector<int64_t>> unflatten(const FinAbGroup& t, const std::vector<int64_t>& flat);

// T^copies as one product group (coordinate blocks in order).
FinAbGroup power_group(const FinAbGroup& t, int copies);

// {x in T^cols : M x = 0 over T} and its affine sibling.
ProductSubgroup hom_solutions(const IntMatrix& m, const FinAbGroup& t);
AffineSolutionSet solve_affine(const IntMatrix& m, const FinAbGroup& t,
                               const std::vector<std::vector<int64_t>>& rhs);

} // namespace mumford
