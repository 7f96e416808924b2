#include "mumford/abelian.hpp"

#include <algorithm>
#include <numeric>

namespace mumford {

FinAbGroup::FinAbGroup(std::vector<int64_t> orders) : orders_(std::move(orders)) {
  for (int64_t e : orders_)
    if (e < 1) throw ValidationError("coordinate order must be >= 1");
}

int64_t FinAbGroup::order() const {
  int64_t n = 1;
  for (int64_t e : orders_) n = checked_mul(n, e);
  return n;
}

std::vector<int64_t> FinAbGroup::reduce(const std::vector<int64_t>& x) const {
  if (x.size() != orders_.size()) throw ValidationError("element rank mismatch");
  std::vector<int64_t> r(x.size());
  for (size_t j = 0; j < x.size(); ++j) r[j] = floor_mod(x[j], orders_[j]);
  return r;
}

std::vector<int64_t> FinAbGroup::add(const std::vector<int64_t>& a, const std::vector<int64_t>& b) const {
  if (a.size() != orders_.size() || b.size() != orders_.size()) throw ValidationError("element rank mismatch");
  std::vector<int64_t> r(a.size());
  for (size_t j = 0; j < a.size(); ++j) r[j] = floor_mod(checked_add(a[j], b[j]), orders_[j]);
  return r;
}

std::vector<int64_t> FinAbGroup::sub(const std::vector<int64_t>& a, const std::vector<int64_t>& b) const {
  if (a.size() != orders_.size() || b.size() != orders_.size()) throw ValidationError("element rank mismatch");
  std::vector<int64_t> r(a.size());
  for (size_t j = 0; j < a.size(); ++j) r[j] = floor_mod(checked_sub(a[j], b[j]), orders_[j]);
  return r;
}

std::vector<int64_t> FinAbGroup::neg(const std::vector<int64_t>& a) const {
  return sub(zero(), a);
}

std::vector<int64_t> FinAbGroup::scale(int64_t c, const std::vector<int64_t>& a) const {
  if (a.size() != orders_.size()) throw ValidationError("element rank mismatch");
  std::vector<int64_t> r(a.size());
  for (size_t j = 0; j < a.size(); ++j) r[j] = floor_mod(checked_mul(c, a[j]), orders_[j]);
  return r;
}

bool FinAbGroup::is_zero(const std::vector<int64_t>& a) const {
  if (a.size() != orders_.size()) throw ValidationError("element rank mismatch");
  for (size_t j = 0; j < a.size(); ++j)
    if (floor_mod(a[j], orders_[j]) != 0) return false;
  return true;
}

int64_t FinAbGroup::element_order(const std::vector<int64_t>& a) const {
  if (a.size() != orders_.size()) throw ValidationError("element rank mismatch");
  int64_t ord = 1;
  for (size_t j = 0; j < a.size(); ++j) {
    int64_t cyc = orders_[j] / std::gcd(orders_[j], floor_mod(a[j], orders_[j]));
    ord = std::lcm(ord, cyc);
  }
  return ord;
}

int64_t FinAbGroup::index_of(const std::vector<int64_t>& x) const {
  std::vector<int64_t> r = reduce(x);
  int64_t idx = 0;
  for (size_t j = 0; j < r.size(); ++j) idx = checked_add(checked_mul(idx, orders_[j]), r[j]);
  return idx;
}

std::vector<int64_t> FinAbGroup::element_at(int64_t index) const {
  if (index < 0 || index >= order()) throw ValidationError("element index out of range");
  std::vector<int64_t> r(orders_.size(), 0);
  for (size_t j = orders_.size(); j-- > 0;) {
    r[j] = index % orders_[j];
    index /= orders_[j];
  }
  return r;
}

std::vector<int64_t> FinAbGroup::apply_matrix(const IntMatrix& m, const std::vector<int64_t>& x) const {
  return reduce(m.apply(x));
}

std::string FinAbGroup::describe() const {
  if (orders_.empty()) return "0";
  std::string s;
  for (size_t j = 0; j < orders_.size(); ++j) {
    if (j) s += " x ";
    s += "Z/" + std::to_string(orders_[j]);
  }
  return s;
}

namespace {

// [gens | diag(e)] with generators as columns.
IntMatrix lattice_matrix(const FinAbGroup& ambient, const std::vector<std::vector<int64_t>>& gens) {
  int d = ambient.rank();
  IntMatrix m(d, static_cast<int>(gens.size()) + d);
  for (size_t g = 0; g < gens.size(); ++g) {
    if (static_cast<int>(gens[g].size()) != d) throw ValidationError("generator rank mismatch");
    for (int i = 0; i < d; ++i) m.at(i, static_cast<int>(g)) = gens[g][static_cast<size_t>(i)];
  }
  for (int i = 0; i < d; ++i) m.at(i, static_cast<int>(gens.size()) + i) = ambient.orders()[static_cast<size_t>(i)];
  return m;
}

int64_t exact_div(int64_t a, int64_t b) {
  if (b == 0 || a % b != 0) throw ValidationError("exact division failed");
  return a / b;
}

} // namespace

ProductSubgroup::ProductSubgroup(FinAbGroup ambient, const std::vector<std::vector<int64_t>>& gens)
    : ambient_(std::move(ambient)) {
  int d = ambient_.rank();
  // Preimage lattice L = span(gens) + diag(e) Z^d; full rank, basis
  // B = U^-1 diag(d_i) from the Smith form of [gens | diag(e)].
  SmithNormalForm sm =
      smith_normal_form(lattice_matrix(ambient_, gens), snf_track_u | snf_track_u_inv);
  if (sm.rank != d) throw Error("preimage lattice lost rank");
  u_m_ = sm.u;
  lattice_factors_ = sm.invariant_factors;
  IntMatrix basis(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) basis.at(i, j) = checked_mul(sm.u_inv.at(i, j), lattice_factors_[static_cast<size_t>(j)]);
  // Relations of L/diag(e): columns of B^-1 diag(e), with B^-1 = diag(1/d_i) U.
  IntMatrix rel(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      rel.at(i, j) = exact_div(checked_mul(u_m_.at(i, j), ambient_.orders()[static_cast<size_t>(j)]),
                               lattice_factors_[static_cast<size_t>(i)]);
  SmithNormalForm sc = smith_normal_form(rel, snf_track_u | snf_track_u_inv);
  if (sc.rank != d) throw Error("relation matrix lost rank");
  u_c_ = sc.u;
  deltas_ = sc.invariant_factors;
  // Generator for each cyclic factor Z/delta_k with delta_k > 1: column k of
  // B U_C^-1, reduced into the ambient product.
  IntMatrix f = basis.mul(sc.u_inv);
  for (int k = 0; k < d; ++k) {
    if (deltas_[static_cast<size_t>(k)] == 1) continue;
    kept_.push_back(k);
    gens_.push_back(ambient_.reduce(f.column_vector(k)));
    gen_orders_.push_back(deltas_[static_cast<size_t>(k)]);
  }
}

ProductSubgroup ProductSubgroup::full(const FinAbGroup& ambient) {
  std::vector<std::vector<int64_t>> gens;
  for (int j = 0; j < ambient.rank(); ++j) {
    std::vector<int64_t> g(static_cast<size_t>(ambient.rank()), 0);
    g[static_cast<size_t>(j)] = 1;
    gens.push_back(std::move(g));
  }
  return ProductSubgroup(ambient, gens);
}

int64_t ProductSubgroup::order() const {
  int64_t n = 1;
  for (int64_t d : gen_orders_) n = checked_mul(n, d);
  return n;
}

bool ProductSubgroup::contains(const std::vector<int64_t>& x) const {
  std::vector<int64_t> w = u_m_.apply(ambient_.reduce(x));
  for (size_t i = 0; i < w.size(); ++i)
    if (w[i] % lattice_factors_[i] != 0) return false;
  return true;
}

std::vector<int64_t> ProductSubgroup::coordinates(const std::vector<int64_t>& x) const {
  std::vector<int64_t> w = u_m_.apply(ambient_.reduce(x));
  std::vector<int64_t> y(w.size());
  for (size_t i = 0; i < w.size(); ++i) {
    if (w[i] % lattice_factors_[i] != 0) throw ValidationError("element outside subgroup");
    y[i] = w[i] / lattice_factors_[i];
  }
  std::vector<int64_t> c = u_c_.apply(y);
  std::vector<int64_t> coords;
  coords.reserve(kept_.size());
  for (size_t k = 0; k < kept_.size(); ++k)
    coords.push_back(floor_mod(c[static_cast<size_t>(kept_[k])], gen_orders_[k]));
  return coords;
}

std::vector<int64_t> ProductSubgroup::element_at(int64_t index) const {
  if (index < 0 || index >= order()) throw ValidationError("subgroup index out of range");
  std::vector<int64_t> x = ambient_.zero();
  for (size_t k = gens_.size(); k-- > 0;) {
    int64_t c = index % gen_orders_[k];
    index /= gen_orders_[k];
    x = ambient_.add(x, ambient_.scale(c, gens_[k]));
  }
  return x;
}

std::vector<int64_t> ProductSubgroup::combine(const std::vector<int64_t>& coords) const {
  if (coords.size() != gens_.size()) throw ValidationError("combination length mismatch");
  std::vector<int64_t> x = ambient_.zero();
  for (size_t k = 0; k < gens_.size(); ++k) x = ambient_.add(x, ambient_.scale(coords[k], gens_[k]));
  return x;
}

std::vector<std::vector<int64_t>> ProductSubgroup::elements(int64_t limit) const {
  int64_t n = order();
  if (n > limit) throw BudgetError("subgroup enumeration exceeds limit");
  std::vector<std::vector<int64_t>> out;
  out.reserve(static_cast<size_t>(n));
  for (int64_t i = 0; i < n; ++i) out.push_back(element_at(i));
  return out;
}

bool ProductSubgroup::same_subgroup_as(const ProductSubgroup& other) const {
  if (!(ambient_ == other.ambient_) || order() != other.order()) return false;
  for (const auto& g : gens_)
    if (!other.contains(g)) return false;
  return true;
}

ProductQuotient::ProductQuotient(FinAbGroup ambient, const ProductSubgroup& sub)
    : ambient_(std::move(ambient)) {
  if (!(sub.ambient() == ambient_)) throw ValidationError("quotient over mismatched ambient");
  // P/S = Z^d / ([gens | diag(e)] Z^(k+d)); read classes off the Smith form.
  SmithNormalForm s = smith_normal_form(lattice_matrix(ambient_, sub.generators()),
                                        snf_track_u | snf_track_u_inv);
  if (s.rank != ambient_.rank()) throw Error("quotient lattice lost rank");
  u_ = s.u;
  u_inv_ = s.u_inv;
  deltas_ = s.invariant_factors;
  std::vector<int64_t> orders;
  for (int i = 0; i < ambient_.rank(); ++i)
    if (deltas_[static_cast<size_t>(i)] > 1) {
      kept_.push_back(i);
      orders.push_back(deltas_[static_cast<size_t>(i)]);
    }
  quotient_ = FinAbGroup(std::move(orders));
}

std::vector<int64_t> ProductQuotient::project(const std::vector<int64_t>& x) const {
  std::vector<int64_t> c = u_.apply(ambient_.reduce(x));
  std::vector<int64_t> cls;
  cls.reserve(kept_.size());
  for (size_t k = 0; k < kept_.size(); ++k)
    cls.push_back(floor_mod(c[static_cast<size_t>(kept_[k])], quotient_.orders()[k]));
  return cls;
}

std::vector<int64_t> ProductQuotient::representative(const std::vector<int64_t>& cls) const {
  if (static_cast<int>(cls.size()) != quotient_.rank()) throw ValidationError("class rank mismatch");
  std::vector<int64_t> c(static_cast<size_t>(ambient_.rank()), 0);
  for (size_t k = 0; k < kept_.size(); ++k) c[static_cast<size_t>(kept_[k])] = cls[k];
  return ambient_.reduce(u_inv_.apply(c));
}

void LinearSystem::validate() const {
  if (a.rows() != static_cast<int>(tgt_orders.size())) throw ValidationError("system row/target mismatch");
  if (a.cols() != static_cast<int>(src_orders.size())) throw ValidationError("system col/source mismatch");
  for (int64_t e : src_orders)
    if (e < 1) throw ValidationError("source order must be >= 1");
  for (int64_t e : tgt_orders)
    if (e < 1) throw ValidationError("target order must be >= 1");
  // The matrix must induce a well-defined map prod Z/src -> prod Z/tgt.
  for (int j = 0; j < a.cols(); ++j)
    for (int i = 0; i < a.rows(); ++i)
      if (checked_mul(a.at(i, j), src_orders[static_cast<size_t>(j)]) % tgt_orders[static_cast<size_t>(i)] != 0)
        throw ValidationError("matrix does not respect the source orders");
}

namespace {

// [A | diag(tgt)]: integer solutions (x, z) of A x + diag(tgt) z = b capture
// congruence solutions of A x = b mod tgt.
IntMatrix augmented_system(const LinearSystem& sys) {
  IntMatrix m(sys.a.rows(), sys.a.cols() + sys.a.rows());
  for (int i = 0; i < sys.a.rows(); ++i) {
    for (int j = 0; j < sys.a.cols(); ++j) m.at(i, j) = sys.a.at(i, j);
    m.at(i, sys.a.cols() + i) = sys.tgt_orders[static_cast<size_t>(i)];
  }
  return m;
}

// x-parts of the augmented kernel, as a subgroup of the source product.
ProductSubgroup kernel_subgroup(const LinearSystem& sys, const SmithNormalForm& s) {
  FinAbGroup src(sys.src_orders);
  IntMatrix k = kernel_basis(s, sys.a.cols() + sys.a.rows());
  std::vector<std::vector<int64_t>> gens;
  for (int j = 0; j < k.cols(); ++j) {
    std::vector<int64_t> g(static_cast<size_t>(sys.a.cols()));
    for (int i = 0; i < sys.a.cols(); ++i) g[static_cast<size_t>(i)] = k.at(i, j);
    gens.push_back(src.reduce(g));
  }
  return ProductSubgroup(src, gens);
}

} // namespace

ProductSubgroup solve_homogeneous(const LinearSystem& sys) {
  sys.validate();
  return kernel_subgroup(sys, smith_normal_form(augmented_system(sys), snf_track_v));
}

bool AffineSolutionSet::contains(const std::vector<int64_t>& x) const {
  if (empty) return false;
  return homogeneous.contains(homogeneous.ambient().sub(x, particular));
}

std::vector<std::vector<int64_t>> AffineSolutionSet::elements(int64_t limit) const {
  if (empty) return {};
  std::vector<std::vector<int64_t>> out = homogeneous.elements(limit);
  for (auto& x : out) x = homogeneous.ambient().add(x, particular);
  return out;
}

AffineSolutionSet solve_system(const LinearSystem& sys, const std::vector<int64_t>& rhs) {
  sys.validate();
  if (static_cast<int>(rhs.size()) != sys.a.rows()) throw ValidationError("rhs length mismatch");
  // One elimination serves both the kernel and the particular solution.
  SmithNormalForm s = smith_normal_form(augmented_system(sys), snf_track_u | snf_track_v);
  AffineSolutionSet out{true, {}, kernel_subgroup(sys, s)};
  auto sol = solve_integer(s, rhs);
  if (!sol) return out;
  std::vector<int64_t> x(sol->begin(), sol->begin() + sys.a.cols());
  out.empty = false;
  out.particular = out.homogeneous.ambient().reduce(x);
  return out;
}

LinearSystem block_system(const IntMatrix& m, const FinAbGroup& t) {
  int d = t.rank();
  LinearSystem sys;
  sys.a = IntMatrix(m.rows() * d, m.cols() * d);
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      if (m.at(i, j) != 0)
        for (int c = 0; c < d; ++c) sys.a.at(i * d + c, j * d + c) = m.at(i, j);
  for (int i = 0; i < m.rows(); ++i)
    for (int c = 0; c < d; ++c) sys.tgt_orders.push_back(t.orders()[static_cast<size_t>(c)]);
  for (int j = 0; j < m.cols(); ++j)
    for (int c = 0; c < d; ++c) sys.src_orders.push_back(t.orders()[static_cast<size_t>(c)]);
  return sys;
}

std::vector<int64_t> flatten(const std::vector<std::vector<int64_t>>& xs) {
  std::vector<int64_t> out;
  for (const auto& x : xs) out.insert(out.end(), x.begin(), x.end());
  return out;
}

std::vector<std::vector<int64_t>> unflatten(const FinAbGroup& t, const std::vector<int64_t>& flat) {
  int d = t.rank();
  if (d == 0) {
    if (!flat.empty()) throw ValidationError("unflatten rank mismatch");
    return {};
  }
  if (static_cast<int>(flat.size()) % d != 0) throw ValidationError("unflatten rank mismatch");
  std::vector<std::vector<int64_t>> out;
  for (size_t i = 0; i < flat.size(); i += static_cast<size_t>(d))
    out.emplace_back(flat.begin() + static_cast<long>(i), flat.begin() + static_cast<long>(i) + d);
  return out;
}

FinAbGroup power_group(const FinAbGroup& t, int copies) {
  if (copies < 0) throw ValidationError("negative block count");
  std::vector<int64_t> orders;
  orders.reserve(static_cast<size_t>(copies) * t.rank());
  for (int i = 0; i < copies; ++i) orders.insert(orders.end(), t.orders().begin(), t.orders().end());
  return FinAbGroup(orders);
}

ProductSubgroup hom_solutions(const IntMatrix& m, const FinAbGroup& t) {
  return solve_homogeneous(block_system(m, t));
}

AffineSolutionSet solve_affine(const IntMatrix& m, const FinAbGroup& t,
                               const std::vector<std::vector<int64_t>>& rhs) {
  return solve_system(block_system(m, t), flatten(rhs));
}

} // namespace mumford
