#include "mumford/group.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace mumford {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (int x : images_) {
    if (x < 0 || x >= degree() || seen[static_cast<size_t>(x)]) throw ValidationError("not a permutation");
    seen[static_cast<size_t>(x)] = true;
  }
}

Permutation Permutation::identity(int degree) {
  std::vector<int> im(static_cast<size_t>(degree));
  for (int i = 0; i < degree; ++i) im[static_cast<size_t>(i)] = i;
  return Permutation(std::move(im));
}

Permutation Permutation::from_cycles(int degree, const std::vector<std::vector<int>>& cycles) {
  std::vector<int> im(static_cast<size_t>(degree));
  for (int i = 0; i < degree; ++i) im[static_cast<size_t>(i)] = i;
  for (const auto& cyc : cycles) {
    for (size_t k = 0; k < cyc.size(); ++k) {
      int from = cyc[k] - 1, to = cyc[(k + 1) % cyc.size()] - 1;
      if (from < 0 || from >= degree) throw ValidationError("cycle point out of range");
      im[static_cast<size_t>(from)] = to;
    }
  }
  return Permutation(std::move(im));
}

Permutation Permutation::inverse() const {
  std::vector<int> im(images_.size());
  for (int i = 0; i < degree(); ++i) im[static_cast<size_t>(images_[static_cast<size_t>(i)])] = i;
  return Permutation(std::move(im));
}

bool Permutation::is_identity() const {
  for (int i = 0; i < degree(); ++i)
    if (images_[static_cast<size_t>(i)] != i) return false;
  return true;
}

std::string Permutation::cycle_string() const {
  std::vector<bool> seen(images_.size(), false);
  std::string s;
  for (int i = 0; i < degree(); ++i) {
    if (seen[static_cast<size_t>(i)] || images_[static_cast<size_t>(i)] == i) continue;
    s += "(";
    int x = i;
    bool first = true;
    do {
      if (!first) s += " ";
      s += std::to_string(x + 1);
      seen[static_cast<size_t>(x)] = true;
      x = images_[static_cast<size_t>(x)];
      first = false;
    } while (x != i);
    s += ")";
  }
  return s.empty() ? "()" : s;
}

Permutation compose(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree()) throw ValidationError("permutation degree mismatch");
  std::vector<int> im(static_cast<size_t>(a.degree()));
  for (int i = 0; i < a.degree(); ++i) im[static_cast<size_t>(i)] = a.apply(b.apply(i));
  return Permutation(std::move(im));
}

FiniteGroup FiniteGroup::from_table(std::vector<std::vector<int>> table, std::vector<std::string> labels) {
  FiniteGroup g;
  g.order_ = static_cast<int>(table.size());
  if (g.order_ == 0) throw ValidationError("empty multiplication table");
  g.table_.reserve(static_cast<size_t>(g.order_) * g.order_);
  for (const auto& row : table) {
    if (static_cast<int>(row.size()) != g.order_) throw ValidationError("ragged multiplication table");
    for (int x : row) {
      if (x < 0 || x >= g.order_) throw ValidationError("table entry out of range");
      g.table_.push_back(x);
    }
  }
  // Identity: two-sided.
  g.id_ = -1;
  for (int e = 0; e < g.order_; ++e) {
    bool ok = true;
    for (int a = 0; a < g.order_ && ok; ++a) ok = g.mul(e, a) == a && g.mul(a, e) == a;
    if (ok) {
      g.id_ = e;
      break;
    }
  }
  if (g.id_ < 0) throw ValidationError("table has no identity");
  // Inverses: must exist and be two-sided.
  g.inv_.assign(static_cast<size_t>(g.order_), -1);
  for (int a = 0; a < g.order_; ++a) {
    for (int b = 0; b < g.order_; ++b)
      if (g.mul(a, b) == g.id_ && g.mul(b, a) == g.id_) {
        g.inv_[static_cast<size_t>(a)] = b;
        break;
      }
    if (g.inv_[static_cast<size_t>(a)] < 0) throw ValidationError("element without inverse");
  }
  // Associativity, exhaustive at the orders this artifact handles.
  if (g.order_ <= 256) {
    for (int a = 0; a < g.order_; ++a)
      for (int b = 0; b < g.order_; ++b)
        for (int c = 0; c < g.order_; ++c)
          if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c))) throw ValidationError("table is not associative");
  }
  if (labels.empty()) {
    for (int a = 0; a < g.order_; ++a) labels.push_back("g" + std::to_string(a));
  }
  if (static_cast<int>(labels.size()) != g.order_) throw ValidationError("label count mismatch");
  g.labels_ = std::move(labels);
  return g;
}

FiniteGroup FiniteGroup::trivial() {
  return from_table({{0}}, {"e"});
}

FiniteGroup FiniteGroup::cyclic(int64_t n) {
  if (n < 1 || n > 4096) throw ValidationError("cyclic order out of range");
  int m = static_cast<int>(n);
  std::vector<std::vector<int>> table(static_cast<size_t>(m), std::vector<int>(static_cast<size_t>(m)));
  std::vector<std::string> labels;
  for (int a = 0; a < m; ++a) {
    labels.push_back(std::to_string(a));
    for (int b = 0; b < m; ++b) table[static_cast<size_t>(a)][static_cast<size_t>(b)] = (a + b) % m;
  }
  return from_table(std::move(table), std::move(labels));
}

FiniteGroup FiniteGroup::symmetric(int n) {
  if (n < 1 || n > 7) throw ValidationError("symmetric degree out of range");
  std::vector<Permutation> gens;
  for (int i = 1; i < n; ++i) gens.push_back(Permutation::from_cycles(n, {{i, i + 1}}));
  if (gens.empty()) gens.push_back(Permutation::identity(n));
  return from_permutations(gens);
}

FiniteGroup FiniteGroup::dihedral(int n) {
  if (n < 3 || n > 100) throw ValidationError("dihedral parameter out of range");
  std::vector<std::vector<int>> rot(1);
  for (int i = 1; i <= n; ++i) rot[0].push_back(i);
  std::vector<std::vector<int>> refl;
  for (int i = 2; i <= n + 1 - i; ++i)
    if (i != n + 2 - i) refl.push_back({i, n + 2 - i});
  return from_permutations({Permutation::from_cycles(n, rot), Permutation::from_cycles(n, refl)});
}

FiniteGroup FiniteGroup::from_permutations(const std::vector<Permutation>& gens, const Budget& budget) {
  if (gens.empty()) throw ValidationError("no generators");
  int degree = gens[0].degree();
  for (const auto& p : gens)
    if (p.degree() != degree) throw ValidationError("generator degree mismatch");
  // Closure, breadth-first from the identity.
  std::vector<Permutation> elems{Permutation::identity(degree)};
  std::map<Permutation, int> index{{elems[0], 0}};
  for (size_t i = 0; i < elems.size(); ++i) {
    for (const auto& p : gens) {
      Permutation q = compose(elems[i], p);
      if (index.emplace(q, static_cast<int>(elems.size())).second) {
        elems.push_back(q);
        if (static_cast<int64_t>(elems.size()) > budget.closure_bound) throw BudgetError("permutation closure exceeds bound");
      }
    }
  }
  int n = static_cast<int>(elems.size());
  if (n > budget.max_table_order) throw BudgetError("closure order exceeds table bound");
  std::vector<std::vector<int>> table(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n)));
  std::vector<std::string> labels;
  for (int a = 0; a < n; ++a) {
    labels.push_back(elems[static_cast<size_t>(a)].cycle_string());
    for (int b = 0; b < n; ++b) table[static_cast<size_t>(a)][static_cast<size_t>(b)] = index.at(compose(elems[static_cast<size_t>(a)], elems[static_cast<size_t>(b)]));
  }
  FiniteGroup g = from_table(std::move(table), std::move(labels));
  g.perms_ = std::move(elems);
  return g;
}

int64_t FiniteGroup::element_order(int a) const {
  int64_t n = 1;
  int x = a;
  while (x != id_) {
    x = mul(x, a);
    ++n;
  }
  return n;
}

bool FiniteGroup::is_abelian() const {
  for (int a = 0; a < order_; ++a)
    for (int b = a + 1; b < order_; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

int FiniteGroup::element_by_label(const std::string& s) const {
  for (int a = 0; a < order_; ++a)
    if (labels_[static_cast<size_t>(a)] == s) return a;
  return -1;
}

std::vector<int> FiniteGroup::generated_subgroup(const std::vector<int>& gens) const {
  std::vector<bool> in(static_cast<size_t>(order_), false);
  std::vector<int> queue{id_};
  in[static_cast<size_t>(id_)] = true;
  for (size_t i = 0; i < queue.size(); ++i)
    for (int gen : gens) {
      int x = mul(queue[i], gen);
      if (!in[static_cast<size_t>(x)]) {
        in[static_cast<size_t>(x)] = true;
        queue.push_back(x);
      }
    }
  std::sort(queue.begin(), queue.end());
  return queue;
}

std::vector<int> FiniteGroup::small_generating_set() const {
  std::vector<int> gens;
  std::vector<int> span{id_};
  while (static_cast<int>(span.size()) < order_) {
    // Add the element generating the largest extension; ties to the smallest index.
    int best = -1;
    size_t best_size = span.size();
    for (int a = 0; a < order_; ++a) {
      if (std::binary_search(span.begin(), span.end(), a)) continue;
      std::vector<int> trial = gens;
      trial.push_back(a);
      size_t sz = generated_subgroup(trial).size();
      if (sz > best_size) {
        best = a;
        best_size = sz;
      }
    }
    gens.push_back(best);
    span = generated_subgroup(gens);
  }
  if (gens.empty()) gens.push_back(id_);
  return gens;
}

std::vector<std::vector<int>> FiniteGroup::conjugacy_classes() const {
  std::vector<bool> seen(static_cast<size_t>(order_), false);
  std::vector<std::vector<int>> classes;
  for (int a = 0; a < order_; ++a) {
    if (seen[static_cast<size_t>(a)]) continue;
    std::set<int> cls;
    for (int g = 0; g < order_; ++g) cls.insert(conjugate(g, a));
    classes.emplace_back(cls.begin(), cls.end());
    for (int x : classes.back()) seen[static_cast<size_t>(x)] = true;
  }
  return classes;
}

std::vector<int64_t> element_order_multiset(const FiniteGroup& g) {
  std::vector<int64_t> orders;
  for (int a = 0; a < g.order(); ++a) orders.push_back(g.element_order(a));
  std::sort(orders.begin(), orders.end());
  return orders;
}

bool is_cyclic_group(const FiniteGroup& g) {
  for (int a = 0; a < g.order(); ++a)
    if (g.element_order(a) == g.order()) return true;
  return false;
}

bool is_dihedral_group(const FiniteGroup& g) {
  if (g.order() % 2 != 0) return false;
  int n = g.order() / 2;
  for (int r = 0; r < g.order(); ++r) {
    if (g.element_order(r) != n) continue;
    std::vector<int> cyc = g.generated_subgroup({r});
    for (int s = 0; s < g.order(); ++s) {
      if (std::binary_search(cyc.begin(), cyc.end(), s)) continue;
      if (g.mul(s, s) == g.identity() && g.conjugate(s, r) == g.inv(r)) return true;
    }
  }
  return false;
}

bool groups_isomorphic(const FiniteGroup& a, const FiniteGroup& b) {
  if (a.order() != b.order()) return false;
  if (element_order_multiset(a) != element_order_multiset(b)) return false;
  std::vector<int> gens = a.small_generating_set();
  int64_t tuples = checked_pow(b.order(), static_cast<int64_t>(gens.size()));
  if (tuples > 1'000'000) throw BudgetError("isomorphism search space too large");
  // Express every element of a as a word in gens (breadth-first).
  std::vector<std::vector<int>> word(static_cast<size_t>(a.order()));
  std::vector<bool> have(static_cast<size_t>(a.order()), false);
  std::vector<int> queue{a.identity()};
  have[static_cast<size_t>(a.identity())] = true;
  for (size_t i = 0; i < queue.size(); ++i)
    for (size_t k = 0; k < gens.size(); ++k) {
      int x = a.mul(queue[i], gens[k]);
      if (!have[static_cast<size_t>(x)]) {
        have[static_cast<size_t>(x)] = true;
        word[static_cast<size_t>(x)] = word[static_cast<size_t>(queue[i])];
        word[static_cast<size_t>(x)].push_back(static_cast<int>(k));
        queue.push_back(x);
      }
    }
  std::vector<int> images(gens.size(), 0);
  for (int64_t t = 0; t < tuples; ++t) {
    int64_t rest = t;
    for (size_t k = 0; k < gens.size(); ++k) {
      images[k] = static_cast<int>(rest % b.order());
      rest /= b.order();
    }
    bool ok = true;
    for (size_t k = 0; k < gens.size() && ok; ++k)
      ok = a.element_order(gens[k]) == b.element_order(images[k]);
    if (!ok) continue;
    // Candidate map via words; check it is a bijective homomorphism.
    std::vector<int> f(static_cast<size_t>(a.order()));
    for (int x = 0; x < a.order(); ++x) {
      int y = b.identity();
      for (int k : word[static_cast<size_t>(x)]) y = b.mul(y, images[static_cast<size_t>(k)]);
      f[static_cast<size_t>(x)] = y;
    }
    std::vector<bool> hit(static_cast<size_t>(b.order()), false);
    for (int y : f) {
      if (hit[static_cast<size_t>(y)]) {
        ok = false;
        break;
      }
      hit[static_cast<size_t>(y)] = true;
    }
    for (int x = 0; x < a.order() && ok; ++x)
      for (int y = 0; y < a.order() && ok; ++y)
        ok = f[static_cast<size_t>(a.mul(x, y))] == b.mul(f[static_cast<size_t>(x)], f[static_cast<size_t>(y)]);
    if (ok) return true;
  }
  return false;
}

namespace {

// Entry (i, j) reduced mod the order of coordinate i; the induced map on T is
// unchanged and entries stay small.
IntMatrix reduce_matrix(const FinAbGroup& t, const IntMatrix& m) {
  IntMatrix r = m;
  for (int i = 0; i < r.rows(); ++i)
    for (int j = 0; j < r.cols(); ++j) r.at(i, j) = floor_mod(r.at(i, j), t.orders()[static_cast<size_t>(i)]);
  return r;
}

bool same_map(const FinAbGroup& t, const IntMatrix& a, const IntMatrix& b) {
  for (int j = 0; j < t.rank(); ++j) {
    std::vector<int64_t> e(static_cast<size_t>(t.rank()), 0);
    e[static_cast<size_t>(j)] = 1;
    if (t.apply_matrix(a, e) != t.apply_matrix(b, e)) return false;
  }
  return true;
}

} // namespace

GAction::GAction(FiniteGroup w, FinAbGroup t, std::vector<IntMatrix> matrices)
    : w_(std::move(w)), t_(std::move(t)), mats_(std::move(matrices)) {
  if (static_cast<int>(mats_.size()) != w_.order()) throw ValidationError("action needs one matrix per element");
  int d = t_.rank();
  for (auto& m : mats_) {
    if (m.rows() != d || m.cols() != d) throw ValidationError("action matrix shape mismatch");
    m = reduce_matrix(t_, m);
  }
  if (!same_map(t_, mats_[static_cast<size_t>(w_.identity())], IntMatrix::identity(d)))
    throw ValidationError("identity must act trivially");
  for (int a = 0; a < w_.order(); ++a)
    for (int b = 0; b < w_.order(); ++b)
      if (!same_map(t_, mats_[static_cast<size_t>(a)].mul(mats_[static_cast<size_t>(b)]), mats_[static_cast<size_t>(w_.mul(a, b))]))
        throw ValidationError("action is not multiplicative");
  for (int a = 0; a < w_.order(); ++a) {
    LinearSystem sys{mats_[static_cast<size_t>(a)], t_.orders(), t_.orders()};
    if (solve_homogeneous(sys).order() != 1) throw ValidationError("action matrix is not injective on T");
  }
}

GAction GAction::trivial(FiniteGroup w, FinAbGroup t) {
  std::vector<IntMatrix> mats(static_cast<size_t>(w.order()), IntMatrix::identity(t.rank()));
  return GAction(std::move(w), std::move(t), std::move(mats));
}

GAction GAction::inversion(FiniteGroup w, FinAbGroup t) {
  if (w.order() != 2) throw ValidationError("inversion action requires |W| = 2");
  std::vector<IntMatrix> mats(2, IntMatrix::identity(t.rank()));
  int s = 1 - w.identity();
  for (int i = 0; i < t.rank(); ++i) mats[static_cast<size_t>(s)].at(i, i) = -1;
  return GAction(std::move(w), std::move(t), std::move(mats));
}

GAction GAction::coordinate_swap(FiniteGroup w, FinAbGroup t) {
  if (w.order() != 2) throw ValidationError("swap action requires |W| = 2");
  if (t.rank() % 2 != 0) throw ValidationError("swap action requires even rank");
  int h = t.rank() / 2;
  std::vector<IntMatrix> mats(2, IntMatrix::identity(t.rank()));
  int s = 1 - w.identity();
  IntMatrix m(t.rank(), t.rank());
  for (int i = 0; i < h; ++i) {
    m.at(i, h + i) = 1;
    m.at(h + i, i) = 1;
  }
  mats[static_cast<size_t>(s)] = m;
  return GAction(std::move(w), std::move(t), std::move(mats));
}

GAction GAction::coordinate_permutation(FiniteGroup w, FinAbGroup t) {
  if (!w.has_permutations()) throw ValidationError("coordinate permutation needs a permutation group");
  std::vector<IntMatrix> mats;
  for (int a = 0; a < w.order(); ++a) {
    const Permutation& p = w.permutation(a);
    if (p.degree() != t.rank()) throw ValidationError("permutation degree must match T rank");
    IntMatrix m(t.rank(), t.rank());
    for (int j = 0; j < t.rank(); ++j) m.at(p.apply(j), j) = 1;
    mats.push_back(std::move(m));
  }
  return GAction(std::move(w), std::move(t), std::move(mats));
}

GAction GAction::even_ones(FiniteGroup w, FinAbGroup t) {
  if (!w.has_permutations()) throw ValidationError("even-ones action needs a permutation group");
  for (int64_t e : t.orders())
    if (e != 2) throw ValidationError("even-ones action requires (Z/2)^k coefficients");
  int n = t.rank() + 1;
  std::vector<IntMatrix> mats;
  for (int a = 0; a < w.order(); ++a) {
    const Permutation& p = w.permutation(a);
    if (p.degree() != n) throw ValidationError("permutation degree must be rank+1");
    // u_i = e_i + e_{n-1}; w(u_i) = u_{w(i)} + u_{w(n-1)} with u_{n-1} read as 0.
    IntMatrix m(t.rank(), t.rank());
    for (int i = 0; i < t.rank(); ++i) {
      int wi = p.apply(i), wn = p.apply(n - 1);
      if (wi < t.rank()) m.at(wi, i) = 1;
      if (wn < t.rank()) m.at(wn, i) = checked_add(m.at(wn, i), 1);
    }
    mats.push_back(std::move(m));
  }
  return GAction(std::move(w), std::move(t), std::move(mats));
}

GAction GAction::from_generator_matrices(FiniteGroup w, FinAbGroup t, const std::vector<int>& gens,
                                         const std::vector<IntMatrix>& mats) {
  if (gens.size() != mats.size()) throw ValidationError("generator/matrix count mismatch");
  if (w.generated_subgroup(gens).size() != static_cast<size_t>(w.order()))
    throw ValidationError("matrices given on a non-generating set");
  std::vector<IntMatrix> all(static_cast<size_t>(w.order()));
  std::vector<bool> have(static_cast<size_t>(w.order()), false);
  all[static_cast<size_t>(w.identity())] = IntMatrix::identity(t.rank());
  have[static_cast<size_t>(w.identity())] = true;
  std::vector<int> queue{w.identity()};
  for (size_t i = 0; i < queue.size(); ++i)
    for (size_t k = 0; k < gens.size(); ++k) {
      int x = w.mul(queue[i], gens[k]);
      if (!have[static_cast<size_t>(x)]) {
        have[static_cast<size_t>(x)] = true;
        all[static_cast<size_t>(x)] = reduce_matrix(t, all[static_cast<size_t>(queue[i])].mul(mats[k]));
        queue.push_back(x);
      }
    }
  return GAction(std::move(w), std::move(t), std::move(all));
}

bool GAction::is_trivial() const {
  IntMatrix id = IntMatrix::identity(t_.rank());
  for (const auto& m : mats_)
    if (!same_map(t_, m, id)) return false;
  return true;
}

bool GAction::same_action_as(const GAction& o) const {
  if (!(w_ == o.w_) || !(t_ == o.t_)) return false;
  for (int a = 0; a < w_.order(); ++a)
    if (!same_map(t_, mats_[static_cast<size_t>(a)], o.mats_[static_cast<size_t>(a)])) return false;
  return true;
}

} // namespace mumford
