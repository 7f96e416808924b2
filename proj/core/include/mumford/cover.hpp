#pragma once

#include <utility>
#include <vector>

#include "mumford/abelian.hpp"
#include "mumford/surface.hpp"

namespace mumford {

// Schreier generator s_{w,x} = t(w) x t(w x)^{-1} for a non-tree edge
// (coset w, positive letter of generator `letter`).
struct SchreierGenerator {
  int coset = 0;
  int letter = 0;
};

// Reidemeister-Schreier presentation of the kernel of a surjection from a
// surface group onto a finite deck group W.  Cosets are identified with W
// elements; the transversal is prefix-closed (BFS spanning tree).
class CoverPresentation {
public:
  CoverPresentation(const FiniteGroup& deck, const SurfaceRep& rho_bar,
                    std::vector<int> letter_order = {});

  int genus_base() const { return rho_bar_.genus; }
  int genus_cover() const { return genus_cover_; }
  const FiniteGroup& deck() const { return deck_; }
  const SurfaceRep& rho_bar() const { return rho_bar_; }
  int num_generators() const { return static_cast<int>(gens_.size()); }
  const std::vector<SchreierGenerator>& generators() const { return gens_; }
  const Word& transversal_word(int w) const { return transversal_.at(static_cast<size_t>(w)); }
  const Word& generator_word(int i) const { return gen_words_.at(static_cast<size_t>(i)); }
  // Rows = abelianized rewrites of the surface relation conjugated across the
  // transversal; shape |W| x num_generators.
  const IntMatrix& relator_matrix() const { return relator_matrix_; }

  // Abelianized rewrite of a base-group word starting at the given coset:
  // exponent vector over Schreier generators plus the end coset.
  std::pair<std::vector<int64_t>, int> rewrite(const Word& word, int start) const;
  int coset_of(const Word& word, int start) const;

private:
  FiniteGroup deck_;
  SurfaceRep rho_bar_;
  std::vector<int> letter_images_;
  std::vector<Word> transversal_;
  std::vector<int> edge_index_; // coset*2g + generator -> Schreier index, -1 on tree edges
  std::vector<SchreierGenerator> gens_;
  std::vector<Word> gen_words_;
  IntMatrix relator_matrix_;
  int genus_cover_ = 0;
};

CoverPresentation build_cover(const FiniteGroup& deck, const SurfaceRep& rho_bar,
                              std::vector<int> letter_order = {});

// First cohomology of the cover with coefficients in T: homomorphisms from the
// kernel to T, i.e. decorations of the Schreier generators killing every
// conjugated relator row.  Ambient group is T^r flattened.
ProductSubgroup h1_cover(const CoverPresentation& c, const FinAbGroup& t);
FinAbGroup cover_ambient(const CoverPresentation& c, const FinAbGroup& t);

// Integer matrix C_w with row i = abelianized rewrite of t(w)^{-1} s_i t(w).
IntMatrix conjugation_matrix(const CoverPresentation& c, int w);
// (w . phi)(s_i) = sigma(w) sum_j C_w[i][j] phi_j for phi in T^r flattened.
std::vector<int64_t> twisted_apply(const CoverPresentation& c, const GAction& sigma, int w,
                                   const std::vector<int64_t>& phi);
// W-invariant classes inside H^1 of the cover.
ProductSubgroup invariants_subgroup(const CoverPresentation& c, const GAction& sigma);

// Crossed homomorphisms of the base surface group twisted by sigma∘rho_bar,
// as decorations u in T^{2g}; principal ones are u_t(x_j) = sigma(x_j)t - t.
ProductSubgroup surface_crossed_homs(const CoverPresentation& c, const GAction& sigma);
ProductSubgroup principal_crossed_homs(const CoverPresentation& c, const GAction& sigma);

// Crossed evaluation of a word at a decoration u (sum sigma(prefix) u_j).
std::vector<int64_t> crossed_evaluate(const CoverPresentation& c, const GAction& sigma,
                                      const std::vector<int64_t>& u, const Word& word);
// Restriction of a crossed homomorphism to the kernel: values on the Schreier
// generators, flattened into T^r.
std::vector<int64_t> restrict_crossed_hom(const CoverPresentation& c, const GAction& sigma,
                                          const std::vector<int64_t>& u);
ProductSubgroup restriction_image(const CoverPresentation& c, const GAction& sigma);
// Kernel of the restriction inside the crossed homomorphisms of the base.
ProductSubgroup restriction_kernel(const CoverPresentation& c, const GAction& sigma);
// Crossed homomorphisms of W pulled back along rho_bar, as decorations in T^{2g}.
ProductSubgroup inflation_subgroup(const CoverPresentation& c, const GAction& sigma);

} // namespace mumford
