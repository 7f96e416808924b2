#include "mumford/int_matrix.hpp"

#include <cstdlib>

namespace mumford {

IntMatrix IntMatrix::from_rows(std::initializer_list<std::initializer_list<int64_t>> rows) {
  int r = static_cast<int>(rows.size());
  int c = r == 0 ? 0 : static_cast<int>(rows.begin()->size());
  IntMatrix m(r, c);
  int i = 0;
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != c) throw ValidationError("ragged row list");
    int j = 0;
    for (int64_t x : row) m.at(i, j++) = x;
    ++i;
  }
  return m;
}

IntMatrix IntMatrix::mul(const IntMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw ValidationError("matrix product shape mismatch");
  IntMatrix r(rows_, rhs.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      int64_t a = at(i, k);
      if (a == 0) continue;
      for (int j = 0; j < rhs.cols_; ++j)
        r.at(i, j) = checked_add(r.at(i, j), checked_mul(a, rhs.at(k, j)));
    }
  return r;
}

std::vector<int64_t> IntMatrix::apply(const std::vector<int64_t>& x) const {
  if (static_cast<int>(x.size()) != cols_) throw ValidationError("matrix-vector shape mismatch");
  std::vector<int64_t> r(static_cast<size_t>(rows_), 0);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if (at(i, j) != 0) r[static_cast<size_t>(i)] = checked_add(r[static_cast<size_t>(i)], checked_mul(at(i, j), x[static_cast<size_t>(j)]));
  return r;
}

IntMatrix IntMatrix::hstack(const IntMatrix& rhs) const {
  if (rows_ != rhs.rows_) throw ValidationError("hstack row mismatch");
  IntMatrix r(rows_, cols_ + rhs.cols_);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
    for (int j = 0; j < rhs.cols_; ++j) r.at(i, cols_ + j) = rhs.at(i, j);
  }
  return r;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix r(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

IntMatrix IntMatrix::column(int j) const {
  IntMatrix r(rows_, 1);
  for (int i = 0; i < rows_; ++i) r.at(i, 0) = at(i, j);
  return r;
}

std::vector<int64_t> IntMatrix::column_vector(int j) const {
  std::vector<int64_t> v(static_cast<size_t>(rows_));
  for (int i = 0; i < rows_; ++i) v[static_cast<size_t>(i)] = at(i, j);
  return v;
}

void IntMatrix::set_column(int j, const std::vector<int64_t>& v) {
  if (static_cast<int>(v.size()) != rows_) throw ValidationError("set_column length mismatch");
  for (int i = 0; i < rows_; ++i) at(i, j) = v[static_cast<size_t>(i)];
}

namespace {

// Elementary operations on d with the requested transforms (and inverses)
// mirrored.  Skipping unused transforms keeps large eliminations affordable.
struct Worker {
  IntMatrix d, u, v, u_inv, v_inv;
  bool tu, tv, tui, tvi;

  Worker(const IntMatrix& m, unsigned track)
      : d(m),
        tu(track & snf_track_u),
        tv(track & snf_track_v),
        tui(track & snf_track_u_inv),
        tvi(track & snf_track_v_inv) {
    if (tu) u = IntMatrix::identity(m.rows());
    if (tv) v = IntMatrix::identity(m.cols());
    if (tui) u_inv = IntMatrix::identity(m.rows());
    if (tvi) v_inv = IntMatrix::identity(m.cols());
  }

  void swap_rows(int i, int j) {
    if (i == j) return;
    for (int k = 0; k < d.cols(); ++k) std::swap(d.at(i, k), d.at(j, k));
    if (tu)
      for (int k = 0; k < u.cols(); ++k) std::swap(u.at(i, k), u.at(j, k));
    if (tui)
      for (int k = 0; k < u_inv.rows(); ++k) std::swap(u_inv.at(k, i), u_inv.at(k, j));
  }

  void swap_cols(int i, int j) {
    if (i == j) return;
    for (int k = 0; k < d.rows(); ++k) std::swap(d.at(k, i), d.at(k, j));
    if (tv)
      for (int k = 0; k < v.rows(); ++k) std::swap(v.at(k, i), v.at(k, j));
    if (tvi)
      for (int k = 0; k < v_inv.cols(); ++k) std::swap(v_inv.at(i, k), v_inv.at(j, k));
  }

  // row_i += c * row_j
  void add_row(int i, int j, int64_t c) {
    if (c == 0) return;
    for (int k = 0; k < d.cols(); ++k) d.at(i, k) = checked_add(d.at(i, k), checked_mul(c, d.at(j, k)));
    if (tu)
      for (int k = 0; k < u.cols(); ++k) u.at(i, k) = checked_add(u.at(i, k), checked_mul(c, u.at(j, k)));
    if (tui)
      for (int k = 0; k < u_inv.rows(); ++k)
        u_inv.at(k, j) = checked_sub(u_inv.at(k, j), checked_mul(c, u_inv.at(k, i)));
  }

  // col_i += c * col_j
  void add_col(int i, int j, int64_t c) {
    if (c == 0) return;
    for (int k = 0; k < d.rows(); ++k) d.at(k, i) = checked_add(d.at(k, i), checked_mul(c, d.at(k, j)));
    if (tv)
      for (int k = 0; k < v.rows(); ++k) v.at(k, i) = checked_add(v.at(k, i), checked_mul(c, v.at(k, j)));
    if (tvi)
      for (int k = 0; k < v_inv.cols(); ++k)
        v_inv.at(j, k) = checked_sub(v_inv.at(j, k), checked_mul(c, v_inv.at(i, k)));
  }

  void negate_row(int i) {
    for (int k = 0; k < d.cols(); ++k) d.at(i, k) = checked_neg(d.at(i, k));
    if (tu)
      for (int k = 0; k < u.cols(); ++k) u.at(i, k) = checked_neg(u.at(i, k));
    if (tui)
      for (int k = 0; k < u_inv.rows(); ++k) u_inv.at(k, i) = checked_neg(u_inv.at(k, i));
  }
};

} // namespace

SmithNormalForm smith_normal_form(const IntMatrix& m, unsigned track) {
  Worker w(m, track);
  int rows = m.rows(), cols = m.cols();
  int limit = rows < cols ? rows : cols;

  for (int t = 0; t < limit; ++t) {
    // Smallest nonzero entry of the trailing submatrix becomes the pivot.
    int pi = -1, pj = -1;
    int64_t best = 0;
    for (int i = t; i < rows; ++i)
      for (int j = t; j < cols; ++j) {
        int64_t a = w.d.at(i, j);
        if (a == 0) continue;
        int64_t abs = a < 0 ? checked_neg(a) : a;
        if (pi < 0 || abs < best) {
          pi = i;
          pj = j;
          best = abs;
        }
      }
    if (pi < 0) break; // submatrix is zero
    w.swap_rows(t, pi);
    w.swap_cols(t, pj);

    for (;;) {
      // Clear column t below the pivot.
      bool dirty = false;
      for (int i = t + 1; i < rows; ++i) {
        int64_t a = w.d.at(i, t);
        if (a == 0) continue;
        int64_t q = a / w.d.at(t, t);
        w.add_row(i, t, checked_neg(q));
        if (w.d.at(i, t) != 0) { // remainder smaller than pivot: promote it
          w.swap_rows(t, i);
          dirty = true;
        }
      }
      if (dirty) continue;
      // Clear row t right of the pivot.
      for (int j = t + 1; j < cols; ++j) {
        int64_t a = w.d.at(t, j);
        if (a == 0) continue;
        int64_t q = a / w.d.at(t, t);
        w.add_col(j, t, checked_neg(q));
        if (w.d.at(t, j) != 0) {
          w.swap_cols(t, j);
          dirty = true;
        }
      }
      if (dirty) continue;
      // Pivot must divide every later entry; fold in any offender and retry.
      bool fixed = false;
      for (int i = t + 1; i < rows && !fixed; ++i)
        for (int j = t + 1; j < cols && !fixed; ++j)
          if (w.d.at(i, j) % w.d.at(t, t) != 0) {
            w.add_row(t, i, 1);
            fixed = true;
          }
      if (!fixed) break;
    }
    if (w.d.at(t, t) < 0) w.negate_row(t);
  }

  SmithNormalForm s;
  s.u = std::move(w.u);
  s.v = std::move(w.v);
  s.d = std::move(w.d);
  s.u_inv = std::move(w.u_inv);
  s.v_inv = std::move(w.v_inv);
  for (int t = 0; t < limit; ++t) {
    int64_t a = s.d.at(t, t);
    if (a == 0) break;
    s.invariant_factors.push_back(a);
  }
  s.rank = static_cast<int>(s.invariant_factors.size());
  return s;
}

std::optional<std::vector<int64_t>> solve_integer(const SmithNormalForm& s, const std::vector<int64_t>& b) {
  // m y = b  <=>  d (v^-1 y) = u b
  std::vector<int64_t> ub = s.u.apply(b);
  int cols = s.v.rows();
  std::vector<int64_t> w(static_cast<size_t>(cols), 0);
  for (int i = 0; i < static_cast<int>(ub.size()); ++i) {
    if (i < s.rank) {
      int64_t di = s.d.at(i, i);
      if (ub[static_cast<size_t>(i)] % di != 0) return std::nullopt;
      if (i < cols) w[static_cast<size_t>(i)] = ub[static_cast<size_t>(i)] / di;
    } else if (ub[static_cast<size_t>(i)] != 0) {
      return std::nullopt;
    }
  }
  return s.v.apply(w);
}

std::optional<std::vector<int64_t>> solve_integer(const IntMatrix& m, const std::vector<int64_t>& b) {
  return solve_integer(smith_normal_form(m, snf_track_u | snf_track_v), b);
}

IntMatrix kernel_basis(const SmithNormalForm& s, int cols) {
  int free = cols - s.rank;
  IntMatrix k(cols, free);
  for (int j = 0; j < free; ++j)
    for (int i = 0; i < cols; ++i) k.at(i, j) = s.v.at(i, s.rank + j);
  return k;
}

IntMatrix kernel_basis(const IntMatrix& m) {
  return kernel_basis(smith_normal_form(m, snf_track_v), m.cols());
}

int64_t determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw ValidationError("determinant of non-square matrix");
  int n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  int64_t prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (a.at(k, k) == 0) {
      int p = -1;
      for (int i = k + 1; i < n; ++i)
        if (a.at(i, k) != 0) {
          p = i;
          break;
        }
      if (p < 0) return 0;
      for (int j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(p, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) {
        int64_t num = checked_sub(checked_mul(a.at(i, j), a.at(k, k)), checked_mul(a.at(i, k), a.at(k, j)));
        a.at(i, j) = num / prev; // exact by Bareiss
      }
    prev = a.at(k, k);
  }
  return sign > 0 ? a.at(n - 1, n - 1) : checked_neg(a.at(n - 1, n - 1));
}

void add_scaled_block(IntMatrix& a, int row0, int col0, int64_t scalar, const IntMatrix& block) {
  if (scalar == 0) return;
  for (int p = 0; p < block.rows(); ++p)
    for (int q = 0; q < block.cols(); ++q) {
      if (block.at(p, q) == 0) continue;
      int64_t& cell = a.at(row0 + p, col0 + q);
      cell = checked_add(cell, checked_mul(scalar, block.at(p, q)));
    }
}

void add_scaled_identity(IntMatrix& a, int row0, int col0, int d, int64_t scalar) {
  if (scalar == 0) return;
  for (int p = 0; p < d; ++p) {
    int64_t& cell = a.at(row0 + p, col0 + p);
    cell = checked_add(cell, scalar);
  }
}

} // namespace mumford
