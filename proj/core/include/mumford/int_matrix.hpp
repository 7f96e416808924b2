#pragma once

#include <initializer_list>
#include <optional>
#include <vector>

#include "mumford/common.hpp"

namespace mumford {

// Dense integer matrix with checked 64-bit arithmetic.
class IntMatrix {
public:
  IntMatrix() = default;
  IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols, 0) {
    if (rows < 0 || cols < 0) throw ValidationError("negative matrix dimension");
  }

  static IntMatrix identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  static IntMatrix diagonal(const std::vector<int64_t>& d) {
    IntMatrix m(static_cast<int>(d.size()), static_cast<int>(d.size()));
    for (int i = 0; i < m.rows(); ++i) m.at(i, i) = d[static_cast<size_t>(i)];
    return m;
  }

  static IntMatrix from_rows(std::initializer_list<std::initializer_list<int64_t>> rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  int64_t& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
  int64_t at(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

  IntMatrix mul(const IntMatrix& rhs) const;
  std::vector<int64_t> apply(const std::vector<int64_t>& x) const; // this * x
  IntMatrix hstack(const IntMatrix& rhs) const;                    // [this | rhs]
  IntMatrix transpose() const;
  IntMatrix column(int j) const;
  std::vector<int64_t> column_vector(int j) const;
  void set_column(int j, const std::vector<int64_t>& v);

  bool operator==(const IntMatrix& o) const = default;

private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<int64_t> a_;
};

// u * m * v = d with u, v unimodular; d diagonal, nonzero entries first and
// each dividing the next.  u_inv, v_inv are the exact inverses (tracked during
// elimination, not recomputed).
struct SmithNormalForm {
  IntMatrix u, v, d;
  IntMatrix u_inv, v_inv;
  int rank = 0;
  std::vector<int64_t> invariant_factors; // positive diagonal entries, d1 | d2 | ...
};

// Which transform matrices to track during elimination.  Untracked members of
// the result are left empty (0 x 0); using one in a product throws.
enum SnfTrack : unsigned {
  snf_track_none = 0,
  snf_track_u = 1,
  snf_track_v = 2,
  snf_track_u_inv = 4,
  snf_track_v_inv = 8,
  snf_track_all = 15,
};

SmithNormalForm smith_normal_form(const IntMatrix& m, unsigned track = snf_track_all);

// Any integer solution y of m*y = b, if one exists.
std::optional<std::vector<int64_t>> solve_integer(const SmithNormalForm& s, const std::vector<int64_t>& b);
std::optional<std::vector<int64_t>> solve_integer(const IntMatrix& m, const std::vector<int64_t>& b);

// Columns form a basis of {y : m*y = 0}.
IntMatrix kernel_basis(const IntMatrix& m);
IntMatrix kernel_basis(const SmithNormalForm& s, int cols);

// Exact determinant (Bareiss); square matrices only.  Used by tests to verify
// unimodularity of transform matrices.
int64_t determinant(const IntMatrix& m);

// a[row0.., col0..] += scalar * block, checked.
void add_scaled_block(IntMatrix& a, int row0, int col0, int64_t scalar, const IntMatrix& block);
void add_scaled_identity(IntMatrix& a, int row0, int col0, int d, int64_t scalar);

} // namespace mumford
