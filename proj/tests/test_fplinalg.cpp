#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "fir/fplinalg.hpp"

using namespace fir;

namespace {

FpMatrix make(std::uint32_t p, int rows, int cols, std::vector<std::uint32_t> e) {
  return FpMatrix(p, rows, cols, std::move(e));
}

// Independent oracle: the full set of vectors in the row space, by walking
// all coefficient combinations of the given rows.
std::set<std::vector<std::uint32_t>> enumerate_span(const std::vector<std::vector<std::uint32_t>>& rows,
                                                    std::uint32_t p, int n) {
  std::set<std::vector<std::uint32_t>> span;
  std::vector<std::uint32_t> coef(rows.size(), 0);
  while (true) {
    std::vector<std::uint32_t> v(n, 0);
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (int j = 0; j < n; ++j)
        v[j] = (v[j] + coef[i] * rows[i][j]) % p;
    span.insert(v);
    std::size_t k = 0;
    while (k < coef.size() && ++coef[k] == p) coef[k++] = 0;
    if (k == coef.size()) break;
  }
  return span;
}

std::vector<std::vector<std::uint32_t>> matrix_rows(const FpMatrix& m) {
  std::vector<std::vector<std::uint32_t>> rows;
  for (int i = 0; i < m.rows(); ++i) {
    std::vector<std::uint32_t> r(m.cols());
    for (int j = 0; j < m.cols(); ++j) r[j] = m(i, j);
    rows.push_back(std::move(r));
  }
  return rows;
}

FpMatrix random_matrix(std::mt19937& rng, std::uint32_t p, int rows, int cols) {
  std::vector<std::uint32_t> e(static_cast<std::size_t>(rows) * cols);
  for (auto& x : e) x = rng() % p;
  return make(p, rows, cols, std::move(e));
}

}  // namespace

TEST_CASE("rref identity is a fixed point") {
  FpMatrix id = FpMatrix::identity(3, 2);
  CHECK(rref(id) == id);
}

TEST_CASE("rref collapses a dependent row") {
  FpMatrix m = make(5, 2, 2, {1, 2, 2, 4});
  FpMatrix r = rref(m);
  CHECK(r == make(5, 2, 2, {1, 2, 0, 0}));
}

TEST_CASE("rref preserves the row space (span oracle over F_2)") {
  std::mt19937 rng(12345);
  for (int trial = 0; trial < 10; ++trial) {
    FpMatrix m = random_matrix(rng, 2, 6, 6);
    FpMatrix r = rref(m);
    auto span_m = enumerate_span(matrix_rows(m), 2, 6);
    auto span_r = enumerate_span(matrix_rows(r), 2, 6);
    CHECK(span_m == span_r);
  }
}

TEST_CASE("rref is idempotent") {
  std::mt19937 rng(999);
  for (std::uint32_t p : {2u, 3u, 5u}) {
    for (int trial = 0; trial < 8; ++trial) {
      FpMatrix m = random_matrix(rng, p, 4, 5);
      FpMatrix r = rref(m);
      CHECK(rref(r) == r);
    }
  }
}

TEST_CASE("kernel of the zero matrix is everything") {
  CHECK(kernel(FpMatrix(2, 3, 3)).dim() == 3);
}

TEST_CASE("kernel of an invertible matrix is zero") {
  FpMatrix m = make(5, 2, 2, {1, 2, 3, 4});  // det = 4 - 6 = -2 != 0 mod 5
  CHECK(kernel(m).dim() == 0);
}

TEST_CASE("kernel vectors are annihilated") {
  FpMatrix m = make(3, 1, 3, {1, 1, 0});
  FpSubspace k = kernel(m);
  CHECK(k.dim() == 2);
  for (int i = 0; i < k.dim(); ++i) {
    std::vector<std::uint32_t> v(3);
    for (int j = 0; j < 3; ++j) v[j] = k.basis()(i, j);
    auto image = m.apply(v);
    CHECK(std::all_of(image.begin(), image.end(), [](std::uint32_t x) { return x == 0; }));
  }
}

TEST_CASE("rank-nullity") {
  std::mt19937 rng(4242);
  for (std::uint32_t p : {2u, 3u, 5u}) {
    for (int trial = 0; trial < 10; ++trial) {
      FpMatrix m = random_matrix(rng, p, 4, 6);
      CHECK(rank(m) + kernel(m).dim() == m.cols());
    }
  }
}

TEST_CASE("canonical form: different spanning sets, same subspace") {
  // Same plane in F_3^3 from two different spanning sets.
  auto u = FpSubspace::from_span(3, 3, {{1, 0, 1}, {0, 1, 2}});
  auto w = FpSubspace::from_span(3, 3, {{1, 1, 0}, {2, 1, 1}, {1, 2, 2}});
  CHECK(u == w);
}

TEST_CASE("subspace: V meet V is V") {
  auto v = FpSubspace::from_span(3, 4, {{1, 0, 2, 0}, {0, 1, 1, 1}});
  CHECK(intersection(v, v) == v);
}

TEST_CASE("complementary coordinate subspaces of F_3^4") {
  auto u = FpSubspace::from_span(3, 4, {{1, 0, 0, 0}, {0, 1, 0, 0}});
  auto w = FpSubspace::from_span(3, 4, {{0, 0, 1, 0}, {0, 0, 0, 1}});
  CHECK(intersection(u, w).dim() == 0);
  CHECK(sum(u, w) == FpSubspace::full(3, 4));
  CHECK(quotient_dim(sum(u, w), u) == 2);
}

TEST_CASE("dimension formula on random pairs in F_2^6, against enumerated spans") {
  std::mt19937 rng(777);
  for (int trial = 0; trial < 12; ++trial) {
    FpMatrix a = random_matrix(rng, 2, 3, 6);
    FpMatrix b = random_matrix(rng, 2, 3, 6);
    auto u = FpSubspace::from_matrix_rows(a);
    auto w = FpSubspace::from_matrix_rows(b);
    auto meet = intersection(u, w);
    auto join = sum(u, w);
    CHECK(u.dim() + w.dim() == meet.dim() + join.dim());
    // Exhaustive check of the intersection against the two spans.
    auto span_u = enumerate_span(matrix_rows(a), 2, 6);
    auto span_w = enumerate_span(matrix_rows(b), 2, 6);
    std::set<std::vector<std::uint32_t>> expected;
    for (const auto& v : span_u)
      if (span_w.count(v)) expected.insert(v);
    auto got = enumerate_span(matrix_rows(meet.basis()), 2, 6);
    CHECK(got == expected);
  }
}

TEST_CASE("commutant of the identity family is everything") {
  std::vector<FpMatrix> fam{FpMatrix::identity(2, 2)};
  auto sol = solve_commutant(fam, fam, 2, 2, 2);
  CHECK(sol.dim == 4);
}

TEST_CASE("endomorphisms of the order-3 action on F_2^2 form F_4 (exhaustive oracle)") {
  FpMatrix a = make(2, 2, 2, {0, 1, 1, 1});
  std::vector<FpMatrix> fam{a};
  auto sol = solve_commutant(fam, fam, 2, 2, 2);
  // Oracle: all 16 matrices X over F_2, count those with X a = a X.
  int count = 0;
  for (int code = 0; code < 16; ++code) {
    FpMatrix x = make(2, 2, 2,
                      {static_cast<std::uint32_t>(code & 1), static_cast<std::uint32_t>((code >> 1) & 1),
                       static_cast<std::uint32_t>((code >> 2) & 1), static_cast<std::uint32_t>((code >> 3) & 1)});
    if (x * a == a * x) ++count;
  }
  CHECK(count == 4);  // 2^dim solutions
  CHECK(sol.dim == 2);
  for (const auto& x : sol.basis) CHECK(x * a == a * x);
}

TEST_CASE("commutant with a zero-dimensional target is zero") {
  FpMatrix a = make(2, 2, 2, {0, 1, 1, 1});
  std::vector<FpMatrix> fam{a};
  std::vector<FpMatrix> empty_target{FpMatrix(2, 0, 0)};
  auto sol = solve_commutant(fam, empty_target, 2, 0, 2);
  CHECK(sol.dim == 0);
}

TEST_CASE("commutant rejects mismatched inputs") {
  std::vector<FpMatrix> a{FpMatrix::identity(2, 2)};
  std::vector<FpMatrix> b{FpMatrix::identity(3, 2)};
  CHECK_THROWS_AS(solve_commutant(a, b, 2, 2, 2), Error);
  std::vector<FpMatrix> two{FpMatrix::identity(2, 2), FpMatrix::identity(2, 2)};
  CHECK_THROWS_AS(solve_commutant(a, two, 2, 2, 2), Error);
}

TEST_CASE("non-prime modulus is rejected") {
  CHECK_THROWS_AS(FpMatrix(6, 2, 2), Error);
}
