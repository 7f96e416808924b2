#include "mumford/cohomology.hpp"

namespace mumford {

Cochain zero_cochain(const GAction& action, int degree) {
  if (degree < 0 || degree > 3) throw ValidationError("cochain degree out of range");
  Cochain c;
  c.degree = degree;
  c.t = action.coeff();
  c.group_order = action.group().order();
  c.values.assign(static_cast<size_t>(checked_pow(c.group_order, degree)), c.t.zero());
  return c;
}

namespace {

void check_shapes(const Cochain& a, const Cochain& b) {
  if (a.degree != b.degree || !(a.t == b.t) || a.group_order != b.group_order)
    throw ValidationError("cochain shape mismatch");
}

} // namespace

Cochain add_cochains(const Cochain& a, const Cochain& b) {
  check_shapes(a, b);
  Cochain r = a;
  for (size_t i = 0; i < r.values.size(); ++i) r.values[i] = a.t.add(a.values[i], b.values[i]);
  return r;
}

Cochain sub_cochains(const Cochain& a, const Cochain& b) {
  check_shapes(a, b);
  Cochain r = a;
  for (size_t i = 0; i < r.values.size(); ++i) r.values[i] = a.t.sub(a.values[i], b.values[i]);
  return r;
}

Cochain coboundary(const GAction& action, const Cochain& c) {
  const FiniteGroup& w = action.group();
  const FinAbGroup& t = action.coeff();
  if (c.group_order != w.order() || !(c.t == t)) throw ValidationError("cochain does not match action");
  if (c.degree > 2) throw ValidationError("coboundary only defined up to degree 2");
  int n = w.order();
  Cochain d = zero_cochain(action, c.degree + 1);
  switch (c.degree) {
    case 0:
      for (int w1 = 0; w1 < n; ++w1)
        d.slot(static_cast<size_t>(w1)) = t.sub(action.apply(w1, c.at()), c.at());
      break;
    case 1:
      for (int w1 = 0; w1 < n; ++w1)
        for (int w2 = 0; w2 < n; ++w2) {
          std::vector<int64_t> v = action.apply(w1, c.at(w2));
          v = t.sub(v, c.at(w.mul(w1, w2)));
          v = t.add(v, c.at(w1));
          d.slot(static_cast<size_t>(w1) * n + w2) = v;
        }
      break;
    case 2:
      for (int w1 = 0; w1 < n; ++w1)
        for (int w2 = 0; w2 < n; ++w2)
          for (int w3 = 0; w3 < n; ++w3) {
            std::vector<int64_t> v = action.apply(w1, c.at(w2, w3));
            v = t.sub(v, c.at(w.mul(w1, w2), w3));
            v = t.add(v, c.at(w1, w.mul(w2, w3)));
            v = t.sub(v, c.at(w1, w2));
            d.slot((static_cast<size_t>(w1) * n + w2) * static_cast<size_t>(n) + w3) = v;
          }
      break;
  }
  return d;
}

bool is_normalized2(const Cochain& f, int identity) {
  if (f.degree != 2) throw ValidationError("expected a 2-cochain");
  for (int w = 0; w < f.group_order; ++w)
    if (!f.t.is_zero(f.at(identity, w)) || !f.t.is_zero(f.at(w, identity))) return false;
  return true;
}

namespace {

bool cocycle_identity_holds(const GAction& action, const Cochain& f) {
  if (f.degree != 2 || f.group_order != action.group().order() || !(f.t == action.coeff())) return false;
  Cochain d = coboundary(action, f);
  for (const auto& v : d.values)
    if (!f.t.is_zero(v)) return false;
  return true;
}

} // namespace

bool is_cocycle2(const GAction& action, const Cochain& f) {
  return cocycle_identity_holds(action, f) && is_normalized2(f, action.group().identity());
}

std::pair<Cochain, Cochain> normalize_cocycle(const GAction& action, const Cochain& f) {
  if (!cocycle_identity_holds(action, f)) throw ValidationError("input is not a 2-cocycle");
  // Any cocycle has f(e,w) = f(e,e) and f(w,e) = sigma(w) f(e,e); subtracting
  // d(theta) for the constant theta == f(e,e) clears both.
  int e = action.group().identity();
  Cochain theta = zero_cochain(action, 1);
  for (int w = 0; w < f.group_order; ++w) theta.slot(static_cast<size_t>(w)) = f.at(e, e);
  Cochain normalized = sub_cochains(f, coboundary(action, theta));
  return {normalized, theta};
}

namespace {

// Adds m (or sign * identity when m is null) into the block at
// (row_block, col_block) of a scalar system over T-coordinates.
void add_block(IntMatrix& a, int d, int row_block, int col_block, const IntMatrix* m, int64_t sign) {
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      int64_t v = m ? m->at(i, j) : (i == j ? 1 : 0);
      if (v == 0) continue;
      int64_t& cell = a.at(row_block * d + i, col_block * d + j);
      cell = checked_add(cell, checked_mul(sign, v));
    }
}

std::vector<int64_t> repeated_orders(const FinAbGroup& t, int blocks) {
  std::vector<int64_t> out;
  out.reserve(static_cast<size_t>(blocks) * t.rank());
  for (int b = 0; b < blocks; ++b)
    for (int64_t e : t.orders()) out.push_back(e);
  return out;
}

} // namespace

H2::H2(GAction action, const Budget& budget) : action_(std::move(action)) {
  const FiniteGroup& w = action_.group();
  const FinAbGroup& t = action_.coeff();
  int n = w.order(), e = w.identity(), d = t.rank();
  pair_pos_.assign(static_cast<size_t>(n) * n, -1);
  for (int w1 = 0; w1 < n; ++w1)
    for (int w2 = 0; w2 < n; ++w2)
      if (w1 != e && w2 != e) {
        pair_pos_[static_cast<size_t>(w1) * n + w2] = static_cast<int>(pair_list_.size());
        pair_list_.push_back(w1 * n + w2);
      }
  int n_pairs = static_cast<int>(pair_list_.size());
  int n_triples = (n - 1) * (n - 1) * (n - 1);
  int64_t cells = checked_mul(static_cast<int64_t>(n_triples) * d, static_cast<int64_t>(n_pairs) * d);
  if (cells > budget.max_system_cells) throw BudgetError("cocycle system exceeds cell budget");

  // Cocycle conditions on free triples; terms through an identity pair vanish
  // by normalization.
  IntMatrix a(n_triples * d, n_pairs * d);
  int row = 0;
  for (int w1 = 0; w1 < n; ++w1) {
    if (w1 == e) continue;
    for (int w2 = 0; w2 < n; ++w2) {
      if (w2 == e) continue;
      for (int w3 = 0; w3 < n; ++w3) {
        if (w3 == e) continue;
        add_block(a, d, row, pair_pos_[static_cast<size_t>(w2) * n + w3], &action_.matrix(w1), 1);
        int p12 = pair_pos_[static_cast<size_t>(w.mul(w1, w2)) * n + w3];
        if (p12 >= 0) add_block(a, d, row, p12, nullptr, -1);
        int p23 = pair_pos_[static_cast<size_t>(w1) * n + w.mul(w2, w3)];
        if (p23 >= 0) add_block(a, d, row, p23, nullptr, 1);
        add_block(a, d, row, pair_pos_[static_cast<size_t>(w1) * n + w2], nullptr, -1);
        ++row;
      }
    }
  }
  LinearSystem sys{std::move(a), repeated_orders(t, n_pairs), repeated_orders(t, n_triples)};
  z2_ = solve_homogeneous(sys);

  // B^2 inside Z^2, written in Z^2 combination coordinates.
  FinAbGroup coords(z2_.generator_orders());
  std::vector<std::vector<int64_t>> b_gens;
  for (int w1 = 0; w1 < n; ++w1) {
    if (w1 == e) continue;
    for (int c = 0; c < d; ++c) {
      Cochain theta = zero_cochain(action_, 1);
      std::vector<int64_t> unit = t.zero();
      unit[static_cast<size_t>(c)] = 1;
      theta.slot(static_cast<size_t>(w1)) = unit;
      b_gens.push_back(z2_.coordinates(pack(coboundary(action_, theta))));
    }
  }
  ProductSubgroup b2(coords, b_gens);
  b2_order_ = b2.order();
  quotient_ = ProductQuotient(coords, b2);
}

std::vector<int64_t> H2::pack(const Cochain& f) const {
  const FinAbGroup& t = action_.coeff();
  if (!is_normalized2(f, action_.group().identity())) throw ValidationError("cochain is not normalized");
  std::vector<int64_t> v;
  v.reserve(pair_list_.size() * static_cast<size_t>(t.rank()));
  for (int flat : pair_list_) {
    const auto& x = f.values[static_cast<size_t>(flat)];
    v.insert(v.end(), x.begin(), x.end());
  }
  return v;
}

Cochain H2::unpack(const std::vector<int64_t>& v) const {
  const FinAbGroup& t = action_.coeff();
  if (v.size() != pair_list_.size() * static_cast<size_t>(t.rank())) throw ValidationError("packed length mismatch");
  Cochain f = zero_cochain(action_, 2);
  size_t k = 0;
  for (int flat : pair_list_) {
    std::vector<int64_t> x(v.begin() + static_cast<long>(k), v.begin() + static_cast<long>(k) + t.rank());
    f.values[static_cast<size_t>(flat)] = t.reduce(x);
    k += static_cast<size_t>(t.rank());
  }
  return f;
}

std::vector<int64_t> H2::project(const Cochain& f) const {
  if (!is_cocycle2(action_, f)) throw ValidationError("projection needs a 2-cocycle");
  return quotient_.project(z2_.coordinates(pack(f)));
}

Cochain H2::representative(const std::vector<int64_t>& cls) const {
  return unpack(z2_.combine(quotient_.representative(cls)));
}

bool H2::cohomologous(const Cochain& f, const Cochain& g) const {
  return project(f) == project(g);
}

std::optional<Cochain> H2::cohomologous_witness(const Cochain& f, const Cochain& g) const {
  if (!is_cocycle2(action_, f) || !is_cocycle2(action_, g)) throw ValidationError("witness needs 2-cocycles");
  const FiniteGroup& w = action_.group();
  const FinAbGroup& t = action_.coeff();
  int n = w.order(), e = w.identity(), d = t.rank();
  // d theta = f - g over unknowns theta(w), w != e, one equation per free pair.
  std::vector<int> pos(static_cast<size_t>(n), -1);
  std::vector<int> elems;
  for (int x = 0; x < n; ++x)
    if (x != e) {
      pos[static_cast<size_t>(x)] = static_cast<int>(elems.size());
      elems.push_back(x);
    }
  int n_pairs = static_cast<int>(pair_list_.size());
  IntMatrix a(n_pairs * d, static_cast<int>(elems.size()) * d);
  std::vector<int64_t> rhs;
  Cochain diff = sub_cochains(f, g);
  int row = 0;
  for (int flat : pair_list_) {
    int w1 = flat / n, w2 = flat % n;
    add_block(a, d, row, pos[static_cast<size_t>(w2)], &action_.matrix(w1), 1);
    int p12 = pos[static_cast<size_t>(w.mul(w1, w2))];
    if (p12 >= 0) add_block(a, d, row, p12, nullptr, -1);
    add_block(a, d, row, pos[static_cast<size_t>(w1)], nullptr, 1);
    const auto& v = diff.at(w1, w2);
    rhs.insert(rhs.end(), v.begin(), v.end());
    ++row;
  }
  LinearSystem sys{std::move(a), repeated_orders(t, static_cast<int>(elems.size())), repeated_orders(t, n_pairs)};
  AffineSolutionSet sol = solve_system(sys, rhs);
  if (sol.empty) return std::nullopt;
  Cochain theta = zero_cochain(action_, 1);
  for (size_t k = 0; k < elems.size(); ++k) {
    std::vector<int64_t> x(sol.particular.begin() + static_cast<long>(k) * d,
                           sol.particular.begin() + static_cast<long>(k + 1) * d);
    theta.values[static_cast<size_t>(elems[k])] = t.reduce(x);
  }
  return theta;
}

GroupH1 group_h1(const GAction& action) {
  const FiniteGroup& w = action.group();
  const FinAbGroup& t = action.coeff();
  int n = w.order(), e = w.identity(), d = t.rank();
  std::vector<int> pos(static_cast<size_t>(n), -1);
  std::vector<int> elems;
  for (int x = 0; x < n; ++x)
    if (x != e) {
      pos[static_cast<size_t>(x)] = static_cast<int>(elems.size());
      elems.push_back(x);
    }
  int m = static_cast<int>(elems.size());
  // Crossed-homomorphism conditions u(w1 w2) = u(w1) + sigma(w1) u(w2) on all
  // free pairs; u(e) = 0 built in.
  IntMatrix a((m * m) * d, m * d);
  int row = 0;
  for (int w1 : elems)
    for (int w2 : elems) {
      add_block(a, d, row, pos[static_cast<size_t>(w2)], &action.matrix(w1), 1);
      add_block(a, d, row, pos[static_cast<size_t>(w1)], nullptr, 1);
      int p12 = pos[static_cast<size_t>(w.mul(w1, w2))];
      if (p12 >= 0) add_block(a, d, row, p12, nullptr, -1);
      ++row;
    }
  LinearSystem sys{std::move(a), repeated_orders(t, m), repeated_orders(t, m * m)};
  GroupH1 out;
  out.z1 = solve_homogeneous(sys);
  FinAbGroup ambient(repeated_orders(t, m));
  std::vector<std::vector<int64_t>> b_gens;
  for (int c = 0; c < d; ++c) {
    std::vector<int64_t> unit = t.zero();
    unit[static_cast<size_t>(c)] = 1;
    std::vector<int64_t> gen;
    for (int x : elems) {
      std::vector<int64_t> v = t.sub(action.apply(x, unit), unit);
      gen.insert(gen.end(), v.begin(), v.end());
    }
    b_gens.push_back(std::move(gen));
  }
  out.b1 = ProductSubgroup(ambient, b_gens);
  return out;
}

} // namespace mumford
