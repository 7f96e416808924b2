#include "mumford/surface.hpp"

#include <algorithm>
#include <map>
#include <thread>

namespace mumford {

Word word_inverse(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(-*it);
  return out;
}

Word word_concat(const Word& a, const Word& b) {
  Word out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

Word relator_word(int genus) {
  if (genus < 0) throw ValidationError("genus must be non-negative");
  Word out;
  for (int i = 0; i < genus; ++i) {
    int x = 2 * i + 1, y = 2 * i + 2;
    out.insert(out.end(), {x, y, -x, -y});
  }
  return out;
}

int evaluate_word(const FiniteGroup& g, const std::vector<int>& images, const Word& w) {
  int acc = g.identity();
  for (int letter : w) {
    if (letter == 0) throw ValidationError("word letters must be non-zero");
    int j = std::abs(letter) - 1;
    if (j >= static_cast<int>(images.size())) throw ValidationError("word letter out of range");
    acc = g.mul(acc, letter > 0 ? images[j] : g.inv(images[j]));
  }
  return acc;
}

bool satisfies_relation(const FiniteGroup& g, const SurfaceRep& r) {
  if (static_cast<int>(r.images.size()) != 2 * r.genus)
    throw ValidationError("surface rep needs 2*genus images");
  return evaluate_word(g, r.images, relator_word(r.genus)) == g.identity();
}

bool is_surjective(const FiniteGroup& g, const SurfaceRep& r) {
  return static_cast<int64_t>(g.generated_subgroup(r.images).size()) == g.order();
}

SurfaceRep conjugate_rep(const FiniteGroup& g, int c, const SurfaceRep& r) {
  SurfaceRep out{r.genus, r.images};
  for (auto& x : out.images) x = g.conjugate(c, x);
  return out;
}

namespace {

// comm[a][c] = sorted list of b with [a,b] = c.
std::vector<std::vector<std::vector<int>>> commutator_table(const FiniteGroup& g) {
  int n = static_cast<int>(g.order());
  std::vector<std::vector<std::vector<int>>> comm(n, std::vector<std::vector<int>>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) comm[a][g.commutator(a, b)].push_back(b);
  return comm;
}

void enumerate_range(const FiniteGroup& g, int genus, int first_lo, int stride,
                     const std::vector<std::vector<std::vector<int>>>& comm,
                     std::vector<std::vector<SurfaceRep>>& by_first) {
  int n = static_cast<int>(g.order());
  int prefix_len = 2 * genus - 1;
  std::vector<int> cur(prefix_len, 0);
  for (int first = first_lo; first < n; first += stride) {
    cur[0] = first;
    // Odometer over the remaining prefix coordinates.
    std::fill(cur.begin() + 1, cur.end(), 0);
    while (true) {
      // Product of the complete commutator pairs among the prefix.
      int p = g.identity();
      for (int i = 0; i + 1 < prefix_len; i += 2) p = g.mul(p, g.commutator(cur[i], cur[i + 1]));
      int target = g.inv(p);
      for (int last : comm[cur[prefix_len - 1]][target]) {
        SurfaceRep rep{genus, cur};
        rep.images.push_back(last);
        by_first[first].push_back(std::move(rep));
      }
      int pos = prefix_len - 1;
      while (pos >= 1 && cur[pos] == n - 1) cur[pos--] = 0;
      if (pos < 1) break;
      ++cur[pos];
    }
  }
}

} // namespace

std::vector<SurfaceRep> enumerate_homs(int genus, const FiniteGroup& g, const Budget& budget,
                                       int workers) {
  if (genus < 0) throw ValidationError("genus must be non-negative");
  if (workers < 1) throw ValidationError("workers must be positive");
  if (genus == 0) return {SurfaceRep{0, {}}};
  int64_t nominal = checked_pow(g.order(), 2 * genus);
  if (nominal > budget.max_tuples)
    throw BudgetError("hom enumeration would visit " + std::to_string(nominal) +
                      " tuples, budget " + std::to_string(budget.max_tuples));
  auto comm = commutator_table(g);
  int n = static_cast<int>(g.order());
  std::vector<std::vector<SurfaceRep>> by_first(n);
  int k = std::min<int>(workers, n);
  if (k == 1) {
    enumerate_range(g, genus, 0, 1, comm, by_first);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < k; ++w)
      pool.emplace_back(enumerate_range, std::cref(g), genus, w, k, std::cref(comm),
                        std::ref(by_first));
    for (auto& t : pool) t.join();
  }
  std::vector<SurfaceRep> out;
  for (auto& bucket : by_first)
    for (auto& rep : bucket) out.push_back(std::move(rep));
  return out;
}

std::vector<SurfaceRep> surjective_homs(int genus, const FiniteGroup& g, const Budget& budget,
                                        int workers) {
  std::vector<SurfaceRep> out;
  for (auto& rep : enumerate_homs(genus, g, budget, workers))
    if (is_surjective(g, rep)) out.push_back(rep);
  return out;
}

int64_t commutator_convolution_count(const FiniteGroup& g, int genus) {
  if (genus < 0) throw ValidationError("genus must be non-negative");
  int n = static_cast<int>(g.order());
  std::vector<int64_t> mu(n, 0);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) mu[g.commutator(a, b)] += 1;
  // g-fold convolution of mu, evaluated at the identity.
  std::vector<int64_t> acc(n, 0);
  acc[g.identity()] = 1;
  for (int i = 0; i < genus; ++i) {
    std::vector<int64_t> next(n, 0);
    for (int a = 0; a < n; ++a) {
      if (acc[a] == 0) continue;
      for (int b = 0; b < n; ++b)
        next[g.mul(a, b)] = checked_add(next[g.mul(a, b)], checked_mul(acc[a], mu[b]));
    }
    acc = std::move(next);
  }
  return acc[g.identity()];
}

std::vector<std::vector<int>> conjugation_orbits(const FiniteGroup& g,
                                                 const std::vector<SurfaceRep>& reps) {
  std::map<std::vector<int>, int> index;
  for (int i = 0; i < static_cast<int>(reps.size()); ++i) {
    if (!index.emplace(reps[i].images, i).second) throw ValidationError("duplicate rep in orbit input");
  }
  std::vector<bool> seen(reps.size(), false);
  std::vector<std::vector<int>> orbits;
  for (int i = 0; i < static_cast<int>(reps.size()); ++i) {
    if (seen[i]) continue;
    std::vector<int> orbit;
    std::vector<int> queue{i};
    seen[i] = true;
    while (!queue.empty()) {
      int cur = queue.back();
      queue.pop_back();
      orbit.push_back(cur);
      for (int c = 0; c < g.order(); ++c) {
        auto conj = conjugate_rep(g, c, reps[cur]);
        auto it = index.find(conj.images);
        if (it == index.end()) throw ValidationError("conjugate escapes the given rep set");
        if (!seen[it->second]) {
          seen[it->second] = true;
          queue.push_back(it->second);
        }
      }
    }
    int64_t stab = 0;
    for (int c = 0; c < g.order(); ++c)
      if (conjugate_rep(g, c, reps[i]).images == reps[i].images) ++stab;
    if (static_cast<int64_t>(orbit.size()) * stab != g.order())
      throw Error("orbit-stabilizer mismatch");
    std::sort(orbit.begin(), orbit.end());
    orbits.push_back(std::move(orbit));
  }
  return orbits;
}

} // namespace mumford
