#include <cstdint>
#include <limits>

#include "doctest.h"
#include "mumford/int_matrix.hpp"

using namespace mumford;

TEST_CASE("checked arithmetic is exact and loud") {
  CHECK(checked_add(2, 3) == 5);
  CHECK(checked_mul(-4, 5) == -20);
  CHECK(checked_pow(2, 10) == 1024);
  CHECK(checked_pow(7, 0) == 1);
  CHECK(floor_mod(-5, 3) == 1);
  CHECK(floor_mod(6, 3) == 0);
  CHECK_THROWS_AS(checked_add(std::numeric_limits<int64_t>::max(), 1), OverflowError);
  CHECK_THROWS_AS(checked_mul(int64_t{1} << 33, int64_t{1} << 33), OverflowError);
  CHECK_THROWS_AS(checked_pow(10, 30), OverflowError);
}

TEST_CASE("matrix basics") {
  IntMatrix a = IntMatrix::from_rows({{1, 2}, {3, 4}});
  IntMatrix b = IntMatrix::from_rows({{0, 1}, {1, 0}});
  CHECK(a.mul(b) == IntMatrix::from_rows({{2, 1}, {4, 3}}));
  CHECK(a.apply({1, 1}) == std::vector<int64_t>{3, 7});
  CHECK(a.transpose() == IntMatrix::from_rows({{1, 3}, {2, 4}}));
  CHECK(a.hstack(b) == IntMatrix::from_rows({{1, 2, 0, 1}, {3, 4, 1, 0}}));
  CHECK(a.column_vector(1) == std::vector<int64_t>{2, 4});
  IntMatrix c = a;
  c.set_column(0, {9, 9});
  CHECK(c.at(0, 0) == 9);
  CHECK(c.at(1, 0) == 9);
  CHECK(determinant(a) == -2);
  CHECK(determinant(IntMatrix::identity(3)) == 1);
}

TEST_CASE("block accumulation helpers") {
  IntMatrix a(3, 3);
  add_scaled_identity(a, 0, 0, 2, 5);
  CHECK(a.at(0, 0) == 5);
  CHECK(a.at(1, 1) == 5);
  CHECK(a.at(2, 2) == 0);
  add_scaled_block(a, 1, 1, -1, IntMatrix::from_rows({{1, 2}, {3, 4}}));
  CHECK(a.at(1, 1) == 4);
  CHECK(a.at(1, 2) == -2);
  CHECK(a.at(2, 1) == -3);
  CHECK(a.at(2, 2) == -4);
}

TEST_CASE("smith normal form on diagonal input") {
  SmithNormalForm s = smith_normal_form(IntMatrix::diagonal({2, 4}));
  CHECK(s.rank == 2);
  CHECK(s.invariant_factors == std::vector<int64_t>{2, 4});

  // order must be restored even when the input diagonal is not divisor-sorted
  SmithNormalForm t = smith_normal_form(IntMatrix::diagonal({4, 2}));
  CHECK(t.invariant_factors == std::vector<int64_t>{2, 4});

  SmithNormalForm z = smith_normal_form(IntMatrix(2, 3));
  CHECK(z.rank == 0);
  CHECK(z.invariant_factors.empty());
}

TEST_CASE("smith decomposition is exact") {
  IntMatrix m = IntMatrix::from_rows({{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}});
  SmithNormalForm s = smith_normal_form(m);
  CHECK(s.u.mul(m).mul(s.v) == s.d);
  int64_t du = determinant(s.u);
  int64_t dv = determinant(s.v);
  CHECK((du == 1 || du == -1));
  CHECK((dv == 1 || dv == -1));
  CHECK(s.u_inv.mul(s.u) == IntMatrix::identity(3));
  CHECK(s.v.mul(s.v_inv) == IntMatrix::identity(3));
  CHECK(s.invariant_factors == std::vector<int64_t>{2, 6, 12});
}

TEST_CASE("integer solving") {
  IntMatrix m = IntMatrix::diagonal({2, 4});
  auto y = solve_integer(m, {2, 8});
  REQUIRE(y.has_value());
  CHECK(m.apply(*y) == std::vector<int64_t>{2, 8});
  CHECK_FALSE(solve_integer(m, {1, 0}).has_value());

  IntMatrix row = IntMatrix::from_rows({{2, 4}});
  auto z = solve_integer(row, {6});
  REQUIRE(z.has_value());
  CHECK(row.apply(*z) == std::vector<int64_t>{6});
}

TEST_CASE("kernel basis") {
  IntMatrix m = IntMatrix::from_rows({{1, 1, 1}});
  IntMatrix k = kernel_basis(m);
  CHECK(k.cols() == 2);
  for (int j = 0; j < k.cols(); ++j) {
    std::vector<int64_t> v = k.column_vector(j);
    CHECK(m.apply(v) == std::vector<int64_t>{0});
  }
  CHECK(kernel_basis(IntMatrix::identity(2)).cols() == 0);
}
