#pragma once

#include "mumford/cohomology.hpp"

namespace mumford {

// Extension 0 -> T -> N -> W -> 0 with the induced action sigma and a
// canonical section.  Carrier either built from a normalized factor set
// (elements are pairs (t, w)) or wrapped around an existing group.
class Extension {
public:
  Extension() = default;
  // N on T x W with (t1,w1)(t2,w2) = (t1 + sigma(w1) t2 + f(w1,w2), w1 w2).
  static Extension from_cocycle(const GAction& action, const Cochain& f, const Budget& budget = {});
  static Extension split(const GAction& action, const Budget& budget = {});
  // Wrap an existing exact sequence; embed maps T element indices to N
  // indices, proj maps N indices to W indices.  The induced action is
  // computed from conjugation and checked over every preimage.
  static Extension from_group(const FiniteGroup& n, const FiniteGroup& w, const FinAbGroup& t,
                              const std::vector<int>& embed, const std::vector<int>& proj);

  const FiniteGroup& group() const { return n_; }
  const GAction& action() const { return action_; }
  const FiniteGroup& base() const { return action_.group(); }
  const FinAbGroup& coeff() const { return action_.coeff(); }

  int embed(const std::vector<int64_t>& t) const { return embed_[static_cast<size_t>(coeff().index_of(t))]; }
  bool in_kernel(int nu) const { return embed_inv_[static_cast<size_t>(nu)] >= 0; }
  std::vector<int64_t> embed_inverse(int nu) const; // throws if nu is outside embed(T)
  int project(int nu) const { return proj_[static_cast<size_t>(nu)]; }
  int section(int w) const { return sect_[static_cast<size_t>(w)]; }

  const Cochain& factor_set() const { return factor_; } // of the canonical section
  Cochain factor_set_of_section(const std::vector<int>& sec) const;
  std::vector<int64_t> class_coords(const H2& h2) const { return h2.project(factor_); }

private:
  FiniteGroup n_;
  GAction action_;
  std::vector<int> embed_;     // |T| entries
  std::vector<int> embed_inv_; // |N| entries, -1 outside the kernel
  std::vector<int> proj_;      // |N| entries
  std::vector<int> sect_;      // |W| entries, canonical section
  Cochain factor_;
};

// Same (W, T, sigma) and equal extension classes.  Throws on mismatched data.
bool equivalent(const Extension& a, const Extension& b, const H2& h2);
// Independent cross-check: exhaustive search for an isomorphism N_a -> N_b
// commuting with embed and project.
bool equivalent_by_search(const Extension& a, const Extension& b);

Extension dihedral_extension(int n); // Z/n by Z/2 with inversion, split: D_2n
Extension weyl_b_extension(int n);   // (Z/2)^n by Sigma_n permuting coordinates, split
Extension weyl_d_extension(int n);   // (Z/2)^(n-1) by Sigma_n in the even-ones basis, split

} // namespace mumford
