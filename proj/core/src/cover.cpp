#include "mumford/cover.hpp"

#include <algorithm>
#include <deque>

#include "mumford/cohomology.hpp"

namespace mumford {

CoverPresentation::CoverPresentation(const FiniteGroup& deck, const SurfaceRep& rho_bar,
                                     std::vector<int> letter_order)
    : deck_(deck), rho_bar_(rho_bar) {
  int g = rho_bar_.genus;
  int n = deck_.order();
  if (!satisfies_relation(deck_, rho_bar_)) throw ValidationError("cover map must kill the surface relation");
  if (!is_surjective(deck_, rho_bar_)) throw ValidationError("cover map must be surjective");
  letter_images_ = rho_bar_.images;
  if (letter_order.empty()) {
    letter_order.resize(static_cast<size_t>(2 * g));
    for (int j = 0; j < 2 * g; ++j) letter_order[static_cast<size_t>(j)] = j;
  }
  {
    auto sorted = letter_order;
    std::sort(sorted.begin(), sorted.end());
    for (int j = 0; j < 2 * g; ++j)
      if (sorted[static_cast<size_t>(j)] != j) throw ValidationError("letter order must permute the generators");
  }

  // BFS spanning tree over the coset graph; the transversal is prefix-closed.
  transversal_.assign(static_cast<size_t>(n), Word{});
  std::vector<bool> visited(static_cast<size_t>(n), false);
  std::vector<bool> tree(static_cast<size_t>(n) * (2 * g ? 2 * g : 1), false);
  std::deque<int> queue;
  visited[static_cast<size_t>(deck_.identity())] = true;
  queue.push_back(deck_.identity());
  while (!queue.empty()) {
    int w = queue.front();
    queue.pop_front();
    for (int j : letter_order) {
      int fwd = deck_.mul(w, letter_images_[static_cast<size_t>(j)]);
      if (!visited[static_cast<size_t>(fwd)]) {
        visited[static_cast<size_t>(fwd)] = true;
        transversal_[static_cast<size_t>(fwd)] = word_concat(transversal_[static_cast<size_t>(w)], {j + 1});
        tree[static_cast<size_t>(w) * 2 * g + j] = true;
        queue.push_back(fwd);
      }
      int bwd = deck_.mul(w, deck_.inv(letter_images_[static_cast<size_t>(j)]));
      if (!visited[static_cast<size_t>(bwd)]) {
        visited[static_cast<size_t>(bwd)] = true;
        transversal_[static_cast<size_t>(bwd)] = word_concat(transversal_[static_cast<size_t>(w)], {-(j + 1)});
        // The positive edge from the new coset lands back at w.
        tree[static_cast<size_t>(bwd) * 2 * g + j] = true;
        queue.push_back(bwd);
      }
    }
  }

  edge_index_.assign(static_cast<size_t>(n * 2 * g), -1);
  for (int w = 0; w < n; ++w) {
    for (int j = 0; j < 2 * g; ++j) {
      if (tree[static_cast<size_t>(w) * 2 * g + j]) continue;
      edge_index_[static_cast<size_t>(w * 2 * g + j)] = static_cast<int>(gens_.size());
      gens_.push_back({w, j});
      int target = deck_.mul(w, letter_images_[static_cast<size_t>(j)]);
      gen_words_.push_back(word_concat(word_concat(transversal_[static_cast<size_t>(w)], {j + 1}),
                                       word_inverse(transversal_[static_cast<size_t>(target)])));
    }
  }
  int expected = g > 0 ? n * (2 * g - 1) + 1 : (n == 1 ? 0 : -1);
  if (static_cast<int>(gens_.size()) != expected) throw Error("Schreier generator count mismatch");
  genus_cover_ = n * (g - 1) + 1;

  Word rel = relator_word(g);
  relator_matrix_ = IntMatrix(n, static_cast<int>(gens_.size()));
  for (int w = 0; w < n; ++w) {
    auto [vec, end] = rewrite(rel, w);
    if (end != w) throw Error("conjugated relator must fix its starting coset");
    for (int i = 0; i < relator_matrix_.cols(); ++i) relator_matrix_.at(w, i) = vec[static_cast<size_t>(i)];
  }
}

std::pair<std::vector<int64_t>, int> CoverPresentation::rewrite(const Word& word, int start) const {
  int g2 = 2 * rho_bar_.genus;
  std::vector<int64_t> vec(gens_.size(), 0);
  int cur = start;
  for (int letter : word) {
    int j = std::abs(letter) - 1;
    if (j < 0 || j >= g2) throw ValidationError("word letter out of range");
    if (letter > 0) {
      int idx = edge_index_[static_cast<size_t>(cur * g2 + j)];
      if (idx >= 0) vec[static_cast<size_t>(idx)] = checked_add(vec[static_cast<size_t>(idx)], 1);
      cur = deck_.mul(cur, letter_images_[static_cast<size_t>(j)]);
    } else {
      cur = deck_.mul(cur, deck_.inv(letter_images_[static_cast<size_t>(j)]));
      int idx = edge_index_[static_cast<size_t>(cur * g2 + j)];
      if (idx >= 0) vec[static_cast<size_t>(idx)] = checked_sub(vec[static_cast<size_t>(idx)], 1);
    }
  }
  return {vec, cur};
}

int CoverPresentation::coset_of(const Word& word, int start) const {
  int cur = start;
  for (int letter : word) {
    int j = std::abs(letter) - 1;
    cur = letter > 0 ? deck_.mul(cur, letter_images_[static_cast<size_t>(j)])
                     : deck_.mul(cur, deck_.inv(letter_images_[static_cast<size_t>(j)]));
  }
  return cur;
}

CoverPresentation build_cover(const FiniteGroup& deck, const SurfaceRep& rho_bar,
                              std::vector<int> letter_order) {
  return CoverPresentation(deck, rho_bar, std::move(letter_order));
}

FinAbGroup cover_ambient(const CoverPresentation& c, const FinAbGroup& t) {
  return power_group(t, c.num_generators());
}

ProductSubgroup h1_cover(const CoverPresentation& c, const FinAbGroup& t) {
  return hom_solutions(c.relator_matrix(), t);
}

IntMatrix conjugation_matrix(const CoverPresentation& c, int w) {
  int r = c.num_generators();
  IntMatrix m(r, r);
  Word tw = c.transversal_word(w);
  Word tw_inv = word_inverse(tw);
  for (int i = 0; i < r; ++i) {
    auto [vec, end] = c.rewrite(word_concat(word_concat(tw_inv, c.generator_word(i)), tw),
                                c.deck().identity());
    if (end != c.deck().identity()) throw Error("conjugated Schreier generator must lie in the kernel");
    for (int j = 0; j < r; ++j) m.at(i, j) = vec[static_cast<size_t>(j)];
  }
  return m;
}

std::vector<int64_t> twisted_apply(const CoverPresentation& c, const GAction& sigma, int w,
                                   const std::vector<int64_t>& phi) {
  const FinAbGroup& t = sigma.coeff();
  int r = c.num_generators();
  int d = t.rank();
  if (static_cast<int>(phi.size()) != r * d) throw ValidationError("decoration has wrong length");
  auto blocks = unflatten(t, phi);
  IntMatrix cm = conjugation_matrix(c, w);
  std::vector<std::vector<int64_t>> out(static_cast<size_t>(r));
  for (int i = 0; i < r; ++i) {
    std::vector<int64_t> acc(static_cast<size_t>(d), 0);
    for (int j = 0; j < r; ++j) {
      int64_t coeff = cm.at(i, j);
      if (coeff == 0) continue;
      for (int k = 0; k < d; ++k)
        acc[static_cast<size_t>(k)] =
            checked_add(acc[static_cast<size_t>(k)], checked_mul(coeff, blocks[static_cast<size_t>(j)][static_cast<size_t>(k)]));
    }
    out[static_cast<size_t>(i)] = sigma.apply(w, t.reduce(acc));
  }
  return flatten(out);
}

namespace {

// Coefficient blocks of the crossed evaluation of `word` as a linear map
// T^{2g} -> T: block j accumulates +-sigma(prefix).
std::vector<IntMatrix> crossed_row_blocks(const CoverPresentation& c, const GAction& sigma,
                                          const Word& word) {
  const FiniteGroup& w = c.deck();
  const FinAbGroup& t = sigma.coeff();
  int g2 = 2 * c.genus_base();
  int d = t.rank();
  std::vector<IntMatrix> blocks(static_cast<size_t>(g2), IntMatrix(d, d));
  const auto& imgs = c.rho_bar().images;
  int cur = w.identity();
  auto accumulate = [&](int j, int64_t sign, int at) {
    const IntMatrix& m = sigma.matrix(at);
    for (int p = 0; p < d; ++p)
      for (int q = 0; q < d; ++q) {
        int64_t& cell = blocks[static_cast<size_t>(j)].at(p, q);
        cell = checked_add(cell, checked_mul(sign, m.at(p, q)));
      }
  };
  for (int letter : word) {
    int j = std::abs(letter) - 1;
    if (j < 0 || j >= g2) throw ValidationError("word letter out of range");
    if (letter > 0) {
      accumulate(j, 1, cur);
      cur = w.mul(cur, imgs[static_cast<size_t>(j)]);
    } else {
      cur = w.mul(cur, w.inv(imgs[static_cast<size_t>(j)]));
      accumulate(j, -1, cur);
    }
  }
  return blocks;
}

} // namespace

ProductSubgroup invariants_subgroup(const CoverPresentation& c, const GAction& sigma) {
  const FinAbGroup& t = sigma.coeff();
  const FiniteGroup& w = c.deck();
  int r = c.num_generators();
  int d = t.rank();
  const IntMatrix& rel = c.relator_matrix();
  int rel_rows = rel.rows();
  // On homomorphisms of the kernel surface group the deck action is a genuine
  // W-action, so invariance under a generating set implies invariance under W.
  std::vector<int> dws;
  for (int dw : w.small_generating_set())
    if (dw != w.identity()) dws.push_back(dw);
  int inv_sets = static_cast<int>(dws.size());
  int total_rows = rel_rows * d + inv_sets * r * d;
  IntMatrix a(total_rows, r * d);
  // Membership in H^1: every conjugated relator row vanishes.
  for (int row = 0; row < rel_rows; ++row)
    for (int j = 0; j < r; ++j)
      for (int k = 0; k < d; ++k) a.at(row * d + k, j * d + k) = rel.at(row, j);
  // Invariance under each generator: phi - w.phi = 0.
  int set = 0;
  for (int dw : dws) {
    IntMatrix cm = conjugation_matrix(c, dw);
    const IntMatrix& sm = sigma.matrix(dw);
    for (int i = 0; i < r; ++i) {
      int bi = rel_rows + set * r + i;
      add_scaled_identity(a, bi * d, i * d, d, 1);
      for (int j = 0; j < r; ++j)
        if (cm.at(i, j) != 0) add_scaled_block(a, bi * d, j * d, -cm.at(i, j), sm);
    }
    ++set;
  }
  std::vector<int64_t> src = power_group(t, r).orders();
  std::vector<int64_t> tgt = power_group(t, rel_rows + inv_sets * r).orders();
  return solve_homogeneous({a, src, tgt});
}

ProductSubgroup surface_crossed_homs(const CoverPresentation& c, const GAction& sigma) {
  const FinAbGroup& t = sigma.coeff();
  int g2 = 2 * c.genus_base();
  int d = t.rank();
  auto blocks = crossed_row_blocks(c, sigma, relator_word(c.genus_base()));
  IntMatrix a(d, g2 * d);
  for (int j = 0; j < g2; ++j) add_scaled_block(a, 0, j * d, 1, blocks[static_cast<size_t>(j)]);
  return solve_homogeneous({a, power_group(t, g2).orders(), t.orders()});
}

ProductSubgroup principal_crossed_homs(const CoverPresentation& c, const GAction& sigma) {
  const FinAbGroup& t = sigma.coeff();
  int g2 = 2 * c.genus_base();
  int d = t.rank();
  FinAbGroup ambient = power_group(t, g2);
  std::vector<std::vector<int64_t>> gens;
  for (int k = 0; k < d; ++k) {
    std::vector<int64_t> basis = t.zero();
    basis[static_cast<size_t>(k)] = 1;
    std::vector<std::vector<int64_t>> u(static_cast<size_t>(g2));
    for (int j = 0; j < g2; ++j)
      u[static_cast<size_t>(j)] =
          t.sub(sigma.apply(c.rho_bar().images[static_cast<size_t>(j)], basis), basis);
    gens.push_back(flatten(u));
  }
  return ProductSubgroup(ambient, gens);
}

std::vector<int64_t> crossed_evaluate(const CoverPresentation& c, const GAction& sigma,
                                      const std::vector<int64_t>& u, const Word& word) {
  const FiniteGroup& w = c.deck();
  const FinAbGroup& t = sigma.coeff();
  auto blocks = unflatten(t, u);
  if (static_cast<int>(blocks.size()) != 2 * c.genus_base())
    throw ValidationError("decoration has wrong length");
  const auto& imgs = c.rho_bar().images;
  std::vector<int64_t> acc = t.zero();
  int cur = w.identity();
  for (int letter : word) {
    int j = std::abs(letter) - 1;
    if (letter > 0) {
      acc = t.add(acc, sigma.apply(cur, blocks[static_cast<size_t>(j)]));
      cur = w.mul(cur, imgs[static_cast<size_t>(j)]);
    } else {
      cur = w.mul(cur, w.inv(imgs[static_cast<size_t>(j)]));
      acc = t.sub(acc, sigma.apply(cur, blocks[static_cast<size_t>(j)]));
    }
  }
  return acc;
}

std::vector<int64_t> restrict_crossed_hom(const CoverPresentation& c, const GAction& sigma,
                                          const std::vector<int64_t>& u) {
  std::vector<std::vector<int64_t>> phi(static_cast<size_t>(c.num_generators()));
  for (int i = 0; i < c.num_generators(); ++i)
    phi[static_cast<size_t>(i)] = crossed_evaluate(c, sigma, u, c.generator_word(i));
  return flatten(phi);
}

ProductSubgroup restriction_image(const CoverPresentation& c, const GAction& sigma) {
  FinAbGroup ambient = cover_ambient(c, sigma.coeff());
  ProductSubgroup z1 = surface_crossed_homs(c, sigma);
  std::vector<std::vector<int64_t>> gens;
  for (const auto& u : z1.generators()) gens.push_back(restrict_crossed_hom(c, sigma, u));
  return ProductSubgroup(ambient, gens);
}

ProductSubgroup restriction_kernel(const CoverPresentation& c, const GAction& sigma) {
  const FinAbGroup& t = sigma.coeff();
  int g2 = 2 * c.genus_base();
  int d = t.rank();
  int r = c.num_generators();
  IntMatrix a((1 + r) * d, g2 * d);
  auto rel_blocks = crossed_row_blocks(c, sigma, relator_word(c.genus_base()));
  for (int j = 0; j < g2; ++j) add_scaled_block(a, 0, j * d, 1, rel_blocks[static_cast<size_t>(j)]);
  for (int i = 0; i < r; ++i) {
    auto blocks = crossed_row_blocks(c, sigma, c.generator_word(i));
    for (int j = 0; j < g2; ++j)
      add_scaled_block(a, (1 + i) * d, j * d, 1, blocks[static_cast<size_t>(j)]);
  }
  return solve_homogeneous({a, power_group(t, g2).orders(), power_group(t, 1 + r).orders()});
}

ProductSubgroup inflation_subgroup(const CoverPresentation& c, const GAction& sigma) {
  const FiniteGroup& w = c.deck();
  const FinAbGroup& t = sigma.coeff();
  int g2 = 2 * c.genus_base();
  FinAbGroup ambient = power_group(t, g2);
  // Slot layout of W-crossed homomorphisms: values on non-identity elements in
  // element-index order, matching group_h1.
  std::vector<int> slot(static_cast<size_t>(w.order()), -1);
  int pos = 0;
  for (int x = 0; x < w.order(); ++x)
    if (x != w.identity()) slot[static_cast<size_t>(x)] = pos++;
  GroupH1 h1w = group_h1(sigma);
  std::vector<std::vector<int64_t>> gens;
  for (const auto& q : h1w.z1.generators()) {
    auto values = unflatten(t, q);
    std::vector<std::vector<int64_t>> u(static_cast<size_t>(g2));
    for (int j = 0; j < g2; ++j) {
      int img = c.rho_bar().images[static_cast<size_t>(j)];
      u[static_cast<size_t>(j)] = img == w.identity() ? t.zero() : values[static_cast<size_t>(slot[static_cast<size_t>(img)])];
    }
    gens.push_back(flatten(u));
  }
  return ProductSubgroup(ambient, gens);
}

} // namespace mumford
