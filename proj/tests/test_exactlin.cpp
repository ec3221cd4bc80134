#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "silt/exactlin.hpp"

using namespace silt;

static Matrix m22(i64 a, i64 b, i64 c, i64 d, i64 p = kDefaultPrime) {
  return Matrix::from_rows({{a, b}, {c, d}}, 2, p);
}

TEST_CASE("field arithmetic") {
  Fp f(kDefaultPrime);
  CHECK(f.reduce(-1) == kDefaultPrime - 1);
  CHECK(f.mul(f.inv(1234), 1234) == 1);
  CHECK(f.pow(3, 0) == 1);
  CHECK_THROWS_AS(Fp(10), Error);   // composite
  CHECK_THROWS_AS(Fp(1), Error);
  CHECK_THROWS_AS(f.inv(0), Error);
}

TEST_CASE("rref of a rank-1 matrix") {
  auto rr = rref(m22(1, 2, 2, 4));
  CHECK(rr.pivots == std::vector<int>{0});
  CHECK(rr.r == m22(1, 2, 0, 0));
}

TEST_CASE("rref is idempotent") {
  Rng rng(7);
  for (int t = 0; t < 20; ++t) {
    Matrix m = random_matrix(rng, 5, 7, kDefaultPrime);
    Rref r1 = rref(m);
    Rref r2 = rref(r1.r);
    CHECK(r1.r == r2.r);
    CHECK(r1.pivots == r2.pivots);
  }
}

TEST_CASE("kernel of a rank-1 matrix") {
  auto ker = kernel_basis(m22(1, 2, 2, 4));
  REQUIRE(ker.size() == 1);
  // spanned by (-2, 1)
  CHECK(ker[0] == Vec{kDefaultPrime - 2, 1});
}

TEST_CASE("rank-nullity over random matrices") {
  Rng rng(11);
  for (int t = 0; t < 30; ++t) {
    int r = int(rng() % 6), c = int(rng() % 6);
    Matrix m = random_matrix(rng, r, c, 101);
    auto ker = kernel_basis(m);
    CHECK(int(ker.size()) == c - rank(m));
    for (const auto& x : ker) {
      Matrix xa(c, 1, m.p);
      for (int i = 0; i < c; ++i) xa.at(i, 0) = x[i];
      CHECK(is_zero(mul(m, xa)));
    }
  }
}

TEST_CASE("solve returns a verified solution or nothing") {
  Matrix m = m22(1, 1, 0, 1);
  auto x = solve(m, {3, 5});
  REQUIRE(x.has_value());
  Fp f(m.p);
  CHECK(f.reduce((*x)[0] + (*x)[1]) == 3);
  CHECK(f.reduce((*x)[1]) == 5);

  // inconsistent: rank-1 system with incompatible rhs
  CHECK_FALSE(solve(m22(1, 2, 2, 4), {1, 3}).has_value());

  Rng rng(13);
  for (int t = 0; t < 30; ++t) {
    Matrix a = random_matrix(rng, 4, 6, 101);
    Vec b = random_vec(rng, 4, 101);
    auto s = solve(a, b);
    if (s) {
      Matrix xs(6, 1, a.p);
      for (int i = 0; i < 6; ++i) xs.at(i, 0) = (*s)[i];
      Matrix prod = mul(a, xs);
      for (int i = 0; i < 4; ++i) CHECK(prod.at(i, 0) == b[i]);
    }
  }
}

TEST_CASE("surjectivity including degenerate shapes") {
  CHECK(is_surjective(Matrix::identity(3, kDefaultPrime)));
  CHECK_FALSE(is_surjective(m22(1, 2, 2, 4)));
  // 1x0: target dim 1, source dim 0
  CHECK_FALSE(is_surjective(Matrix(1, 0, kDefaultPrime)));
  // 0xn: zero target, always onto
  CHECK(is_surjective(Matrix(0, 4, kDefaultPrime)));
  CHECK(rank(Matrix(0, 4, kDefaultPrime)) == 0);
  CHECK(kernel_basis(Matrix(0, 4, kDefaultPrime)).size() == 4);
  CHECK(kernel_basis(Matrix(4, 0, kDefaultPrime)).empty());
}

TEST_CASE("row-convention helpers match transposed column facts") {
  Rng rng(17);
  for (int t = 0; t < 20; ++t) {
    Matrix m = random_matrix(rng, 4, 5, 101);
    auto rk = row_kernel(m);
    CHECK(int(rk.size()) == 4 - rank(m));
    for (const auto& x : rk) {
      Matrix xm = Matrix::from_rows({x}, 4, m.p);
      CHECK(is_zero(mul(xm, m)));
    }
    CHECK(row_is_surjective(m) == is_surjective(transpose(m)));
  }
}

TEST_CASE("row_solve and row space membership") {
  Matrix m = Matrix::from_rows({{1, 0, 1}, {0, 1, 1}}, 3, 101);
  Matrix b = Matrix::from_rows({{1, 1, 2}}, 3, 101);
  auto x = row_solve(m, b);
  REQUIRE(x.has_value());
  CHECK(mul(*x, m) == b);
  CHECK(in_row_space(m, {1, 1, 2}));
  CHECK_FALSE(in_row_space(m, {0, 0, 1}));
  Matrix sp = row_span_basis(m);
  CHECK(sp.rows == 2);
}

TEST_CASE("matrix algebra basics") {
  Matrix a = m22(1, 2, 3, 4, 101);
  Matrix b = m22(0, 1, 1, 0, 101);
  CHECK(mul(a, b) == m22(2, 1, 4, 3, 101));
  CHECK(add(a, sub(b, b)) == a);
  CHECK(scale(2, a) == add(a, a));
  CHECK(transpose(transpose(a)) == a);
  CHECK(hstack(a, b).cols == 4);
  CHECK(vstack(a, b).rows == 4);
}
