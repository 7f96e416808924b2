#include "mumford/extension.hpp"

namespace mumford {

std::vector<int64_t> Extension::embed_inverse(int nu) const {
  int64_t t = embed_inv_[static_cast<size_t>(nu)];
  if (t < 0) throw ValidationError("element is not in the embedded kernel");
  return coeff().element_at(t);
}

Extension Extension::from_cocycle(const GAction& action, const Cochain& f, const Budget& budget) {
  if (!is_cocycle2(action, f)) throw ValidationError("factor set is not a normalized 2-cocycle");
  const FiniteGroup& w = action.group();
  const FinAbGroup& t = action.coeff();
  int nw = w.order();
  int64_t nt = t.order();
  int64_t order = checked_mul(nt, nw);
  if (order > budget.max_table_order) throw BudgetError("extension order exceeds table bound");
  int n = static_cast<int>(order);

  auto pack = [&](int64_t ti, int wi) { return static_cast<int>(ti) * nw + wi; };
  std::vector<std::vector<int>> table(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n)));
  std::vector<std::string> labels(static_cast<size_t>(n));
  for (int64_t t1 = 0; t1 < nt; ++t1) {
    std::vector<int64_t> v1 = t.element_at(t1);
    for (int w1 = 0; w1 < nw; ++w1) {
      std::string lbl = "(";
      for (size_t c = 0; c < v1.size(); ++c) lbl += (c ? "," : "") + std::to_string(v1[c]);
      labels[static_cast<size_t>(pack(t1, w1))] = lbl + ";" + w.label(w1) + ")";
      for (int64_t t2 = 0; t2 < nt; ++t2) {
        std::vector<int64_t> v2 = t.element_at(t2);
        for (int w2 = 0; w2 < nw; ++w2) {
          std::vector<int64_t> prod = t.add(t.add(v1, action.apply(w1, v2)), f.at(w1, w2));
          table[static_cast<size_t>(pack(t1, w1))][static_cast<size_t>(pack(t2, w2))] =
              pack(t.index_of(prod), w.mul(w1, w2));
        }
      }
    }
  }

  Extension e;
  e.n_ = FiniteGroup::from_table(std::move(table), std::move(labels));
  e.action_ = action;
  e.factor_ = f;
  int id_w = w.identity();
  e.embed_.resize(static_cast<size_t>(nt));
  e.embed_inv_.assign(static_cast<size_t>(n), -1);
  e.proj_.resize(static_cast<size_t>(n));
  e.sect_.resize(static_cast<size_t>(nw));
  for (int64_t ti = 0; ti < nt; ++ti) {
    e.embed_[static_cast<size_t>(ti)] = pack(ti, id_w);
    e.embed_inv_[static_cast<size_t>(pack(ti, id_w))] = static_cast<int>(ti);
  }
  for (int64_t ti = 0; ti < nt; ++ti)
    for (int wi = 0; wi < nw; ++wi) e.proj_[static_cast<size_t>(pack(ti, wi))] = wi;
  for (int wi = 0; wi < nw; ++wi) e.sect_[static_cast<size_t>(wi)] = pack(0, wi);
  return e;
}

Extension Extension::split(const GAction& action, const Budget& budget) {
  return from_cocycle(action, zero_cochain(action, 2), budget);
}

Extension Extension::from_group(const FiniteGroup& n, const FiniteGroup& w, const FinAbGroup& t,
                                const std::vector<int>& embed, const std::vector<int>& proj) {
  int64_t nt = t.order();
  if (static_cast<int64_t>(embed.size()) != nt) throw ValidationError("embed table must cover T");
  if (static_cast<int>(proj.size()) != n.order()) throw ValidationError("proj table must cover N");
  if (checked_mul(nt, static_cast<int64_t>(w.order())) != n.order()) throw ValidationError("|N| must equal |T|·|W|");

  // embed: injective homomorphism.
  std::vector<int> inv(static_cast<size_t>(n.order()), -1);
  for (int64_t a = 0; a < nt; ++a) {
    int na = embed[static_cast<size_t>(a)];
    if (na < 0 || na >= n.order() || inv[static_cast<size_t>(na)] >= 0) throw ValidationError("embed is not injective");
    inv[static_cast<size_t>(na)] = static_cast<int>(a);
  }
  for (int64_t a = 0; a < nt; ++a)
    for (int64_t b = 0; b < nt; ++b) {
      int64_t ab = t.index_of(t.add(t.element_at(a), t.element_at(b)));
      if (n.mul(embed[static_cast<size_t>(a)], embed[static_cast<size_t>(b)]) != embed[static_cast<size_t>(ab)])
        throw ValidationError("embed is not a homomorphism");
    }
  // proj: surjective homomorphism with kernel exactly embed(T).
  std::vector<bool> hit(static_cast<size_t>(w.order()), false);
  for (int a = 0; a < n.order(); ++a) {
    if (proj[static_cast<size_t>(a)] < 0 || proj[static_cast<size_t>(a)] >= w.order()) throw ValidationError("proj out of range");
    hit[static_cast<size_t>(proj[static_cast<size_t>(a)])] = true;
  }
  for (bool h : hit)
    if (!h) throw ValidationError("proj is not surjective");
  for (int a = 0; a < n.order(); ++a)
    for (int b = 0; b < n.order(); ++b)
      if (proj[static_cast<size_t>(n.mul(a, b))] != w.mul(proj[static_cast<size_t>(a)], proj[static_cast<size_t>(b)]))
        throw ValidationError("proj is not a homomorphism");
  for (int a = 0; a < n.order(); ++a) {
    bool in_ker = proj[static_cast<size_t>(a)] == w.identity();
    if (in_ker != (inv[static_cast<size_t>(a)] >= 0)) throw ValidationError("kernel of proj differs from embed(T)");
  }

  // Induced action, checked over every preimage.
  int d = t.rank();
  std::vector<IntMatrix> mats(static_cast<size_t>(w.order()), IntMatrix(d, d));
  std::vector<bool> have(static_cast<size_t>(w.order()), false);
  for (int nu = 0; nu < n.order(); ++nu) {
    int wi = proj[static_cast<size_t>(nu)];
    IntMatrix m(d, d);
    for (int c = 0; c < d; ++c) {
      std::vector<int64_t> unit = t.zero();
      unit[static_cast<size_t>(c)] = 1;
      int image = n.conjugate(nu, embed[static_cast<size_t>(t.index_of(unit))]);
      if (inv[static_cast<size_t>(image)] < 0) throw ValidationError("conjugation leaves the kernel");
      std::vector<int64_t> coords = t.element_at(inv[static_cast<size_t>(image)]);
      for (int r = 0; r < d; ++r) m.at(r, c) = coords[static_cast<size_t>(r)];
    }
    if (!have[static_cast<size_t>(wi)]) {
      mats[static_cast<size_t>(wi)] = m;
      have[static_cast<size_t>(wi)] = true;
    } else if (!(mats[static_cast<size_t>(wi)] == m)) {
      throw ValidationError("induced action depends on the preimage");
    }
  }

  Extension e;
  e.n_ = n;
  e.action_ = GAction(w, t, std::move(mats));
  e.embed_ = embed;
  e.embed_inv_ = std::move(inv);
  e.proj_ = proj;
  // Canonical section: identity over e, lexicographically first preimage else.
  e.sect_.assign(static_cast<size_t>(w.order()), -1);
  e.sect_[static_cast<size_t>(w.identity())] = n.identity();
  for (int nu = 0; nu < n.order(); ++nu) {
    int wi = proj[static_cast<size_t>(nu)];
    if (wi != w.identity() && e.sect_[static_cast<size_t>(wi)] < 0) e.sect_[static_cast<size_t>(wi)] = nu;
  }
  e.factor_ = e.factor_set_of_section(e.sect_);
  return e;
}

Cochain Extension::factor_set_of_section(const std::vector<int>& sec) const {
  const FiniteGroup& w = base();
  if (static_cast<int>(sec.size()) != w.order()) throw ValidationError("section must cover W");
  if (sec[static_cast<size_t>(w.identity())] != n_.identity()) throw ValidationError("section must send e to e");
  for (int wi = 0; wi < w.order(); ++wi)
    if (proj_[static_cast<size_t>(sec[static_cast<size_t>(wi)])] != wi) throw ValidationError("not a section of proj");
  Cochain f = zero_cochain(action_, 2);
  for (int w1 = 0; w1 < w.order(); ++w1)
    for (int w2 = 0; w2 < w.order(); ++w2) {
      int prod = n_.mul(n_.mul(sec[static_cast<size_t>(w1)], sec[static_cast<size_t>(w2)]),
                        n_.inv(sec[static_cast<size_t>(w.mul(w1, w2))]));
      if (!in_kernel(prod)) throw ValidationError("factor set value outside the kernel");
      f.values[static_cast<size_t>(w1) * w.order() + w2] = embed_inverse(prod);
    }
  if (!is_cocycle2(action_, f)) throw Error("extracted factor set fails the cocycle identity");
  return f;
}

bool equivalent(const Extension& a, const Extension& b, const H2& h2) {
  if (!(a.base() == b.base()) || !(a.coeff() == b.coeff()) || !a.action().same_action_as(b.action()))
    throw ValidationError("equivalence needs matching (W, T, sigma)");
  return a.class_coords(h2) == b.class_coords(h2);
}

bool equivalent_by_search(const Extension& a, const Extension& b) {
  if (!(a.base() == b.base()) || !(a.coeff() == b.coeff()) || !a.action().same_action_as(b.action()))
    throw ValidationError("equivalence needs matching (W, T, sigma)");
  const FiniteGroup& na = a.group();
  const FiniteGroup& nb = b.group();
  if (na.order() != nb.order()) return false;
  std::vector<int> gens = na.small_generating_set();
  int64_t tuples = checked_pow(nb.order(), static_cast<int64_t>(gens.size()));
  if (tuples > 10'000'000) throw BudgetError("equivalence search space too large");
  std::vector<std::vector<int>> word(static_cast<size_t>(na.order()));
  std::vector<bool> have(static_cast<size_t>(na.order()), false);
  std::vector<int> queue{na.identity()};
  have[static_cast<size_t>(na.identity())] = true;
  for (size_t i = 0; i < queue.size(); ++i)
    for (size_t k = 0; k < gens.size(); ++k) {
      int x = na.mul(queue[i], gens[k]);
      if (!have[static_cast<size_t>(x)]) {
        have[static_cast<size_t>(x)] = true;
        word[static_cast<size_t>(x)] = word[static_cast<size_t>(queue[i])];
        word[static_cast<size_t>(x)].push_back(static_cast<int>(k));
        queue.push_back(x);
      }
    }
  std::vector<int> images(gens.size(), 0);
  for (int64_t tup = 0; tup < tuples; ++tup) {
    int64_t rest = tup;
    for (size_t k = 0; k < gens.size(); ++k) {
      images[k] = static_cast<int>(rest % nb.order());
      rest /= nb.order();
    }
    // Candidate psi from generator images; must commute with proj on gens.
    bool ok = true;
    for (size_t k = 0; k < gens.size() && ok; ++k)
      ok = b.project(images[k]) == a.project(gens[k]);
    if (!ok) continue;
    std::vector<int> psi(static_cast<size_t>(na.order()));
    for (int x = 0; x < na.order(); ++x) {
      int y = nb.identity();
      for (int k : word[static_cast<size_t>(x)]) y = nb.mul(y, images[static_cast<size_t>(k)]);
      psi[static_cast<size_t>(x)] = y;
    }
    std::vector<bool> hit(static_cast<size_t>(nb.order()), false);
    for (int y : psi) {
      if (hit[static_cast<size_t>(y)]) {
        ok = false;
        break;
      }
      hit[static_cast<size_t>(y)] = true;
    }
    for (int x = 0; x < na.order() && ok; ++x)
      for (int y = 0; y < na.order() && ok; ++y)
        ok = psi[static_cast<size_t>(na.mul(x, y))] == nb.mul(psi[static_cast<size_t>(x)], psi[static_cast<size_t>(y)]);
    if (!ok) continue;
    for (int x = 0; x < na.order() && ok; ++x) ok = b.project(psi[static_cast<size_t>(x)]) == a.project(x);
    for (int64_t ti = 0; ti < a.coeff().order() && ok; ++ti) {
      std::vector<int64_t> v = a.coeff().element_at(ti);
      ok = psi[static_cast<size_t>(a.embed(v))] == b.embed(v);
    }
    if (ok) return true;
  }
  return false;
}

Extension dihedral_extension(int n) {
  return Extension::split(GAction::inversion(FiniteGroup::cyclic(2), FinAbGroup::cyclic(n)));
}

Extension weyl_b_extension(int n) {
  FinAbGroup t(std::vector<int64_t>(static_cast<size_t>(n), 2));
  return Extension::split(GAction::coordinate_permutation(FiniteGroup::symmetric(n), t));
}

Extension weyl_d_extension(int n) {
  if (n < 2) throw ValidationError("weyl_d needs n >= 2");
  FinAbGroup t(std::vector<int64_t>(static_cast<size_t>(n) - 1, 2));
  return Extension::split(GAction::even_ones(FiniteGroup::symmetric(n), t));
}

} // namespace mumford
