#pragma once

#include <vector>

#include "mumford/group.hpp"

namespace mumford {

// Word in the surface-group generators: letter +(j+1) is generator j,
// -(j+1) its inverse.
using Word = std::vector<int>;

Word word_inverse(const Word& w);
Word word_concat(const Word& a, const Word& b);
// Product of commutators [x_1,y_1]...[x_g,y_g] over generators (x_i = 2i,
// y_i = 2i+1 as zero-based generator indices).
Word relator_word(int genus);
int evaluate_word(const FiniteGroup& g, const std::vector<int>& images, const Word& w);

// Homomorphism from the genus-g surface group, recorded by generator images
// (x_1, y_1, ..., x_g, y_g).
struct SurfaceRep {
  int genus = 0;
  std::vector<int> images;

  bool operator==(const SurfaceRep& o) const = default;
  bool operator<(const SurfaceRep& o) const { return images < o.images; }
};

bool satisfies_relation(const FiniteGroup& g, const SurfaceRep& r);
bool is_surjective(const FiniteGroup& g, const SurfaceRep& r);
SurfaceRep conjugate_rep(const FiniteGroup& g, int c, const SurfaceRep& r);

// All homomorphisms in lexicographic image order; the last image is solved
// from the relation via a precomputed commutator table rather than enumerated.
std::vector<SurfaceRep> enumerate_homs(int genus, const FiniteGroup& g, const Budget& budget = {},
                                       int workers = 1);
std::vector<SurfaceRep> surjective_homs(int genus, const FiniteGroup& g, const Budget& budget = {},
                                        int workers = 1);

// Independent counting oracle: #{(a,b) : [a,b] = x} convolved g times,
// evaluated at the identity.
int64_t commutator_convolution_count(const FiniteGroup& g, int genus);

// Partition into simultaneous-conjugation orbits (indices into the input);
// verifies |orbit| * |stabilizer| = |G| on each orbit.
std::vector<std::vector<int>> conjugation_orbits(const FiniteGroup& g, const std::vector<SurfaceRep>& reps);

} // namespace mumford
