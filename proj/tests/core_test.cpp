#include "doctest.h"

#include "liekit/core/linalg.hpp"
#include "liekit/core/rational.hpp"
#include "liekit/core/sparse.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <random>

using namespace liekit;

namespace {

// Leibniz determinant; only used as an oracle on tiny matrices.
Rational leibniz_det(const std::vector<std::vector<Rational>>& a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  Rational total;
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (p[i] > p[j]) ++inversions;
    Rational term = inversions % 2 ? -1 : 1;
    for (std::size_t i = 0; i < n; ++i) term *= a[i][p[i]];
    total += term;
  } while (std::next_permutation(p.begin(), p.end()));
  return total;
}

// Largest k with a nonzero k x k minor.
std::size_t minor_rank(const SparseMatrix& m) {
  const std::size_t r = m.rows(), c = m.cols();
  std::size_t best = 0;
  for (unsigned rm = 1; rm < (1u << r); ++rm)
    for (unsigned cm = 1; cm < (1u << c); ++cm) {
      const auto k = static_cast<std::size_t>(std::popcount(rm));
      if (k != static_cast<std::size_t>(std::popcount(cm)) || k <= best) continue;
      std::vector<std::vector<Rational>> sub;
      for (std::size_t i = 0; i < r; ++i) {
        if (!(rm >> i & 1)) continue;
        sub.emplace_back();
        for (std::size_t j = 0; j < c; ++j)
          if (cm >> j & 1) sub.back().push_back(m.at(i, j));
      }
      if (!leibniz_det(sub).is_zero()) best = k;
    }
  return best;
}

SparseMatrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c) {
  std::uniform_int_distribution<int> val(-3, 3), keep(0, 2);
  SparseMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j)
      if (keep(rng) == 0) m.set(i, j, Rational(val(rng), std::int64_t{1 + keep(rng)}));
  return m;
}

}  // namespace

TEST_SUITE("core") {

TEST_CASE("rational stays canonical") {
  Rational a(6, -4);
  CHECK(a.num() == -3);
  CHECK(a.den() == 2);
  CHECK(Rational::parse("10/4") == Rational(5, 2));
  CHECK((Rational(1, 3) + Rational(1, 6)) == Rational(1, 2));
  CHECK(Rational(0, 7).den() == 1);
  CHECK_THROWS(Rational(1, 0));
  CHECK_THROWS(Rational(1) / Rational(0));
}

TEST_CASE("rational round trips are exact") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::int64_t> d(-1'000'000'000, 1'000'000'000);
  for (int t = 0; t < 500; ++t) {
    Rational a(d(rng), std::max<std::int64_t>(1, std::abs(d(rng))));
    Rational b(d(rng), std::max<std::int64_t>(1, std::abs(d(rng))));
    CHECK((a + b) - b == a);
    if (!b.is_zero()) CHECK((a * b) / b == a);
    CHECK(a.den() > 0);
    CHECK(gcd(a.num(), a.den()) == 1);
  }
}

TEST_CASE("sparse matrix never stores zeros") {
  SparseMatrix m(2, 2);
  m.set(0, 0, 1);
  m.add(0, 0, -1);
  m.set(1, 1, 0);
  CHECK(m.nnz() == 0);
  CHECK_THROWS(m.set(2, 0, 1));
  DenseVector v(3);
  CHECK(v.size() == 3);
  CHECK(v.is_zero());
}

TEST_CASE("rank examples") {
  CHECK(rank(SparseMatrix::identity(3)) == 3);
  CHECK(rank(SparseMatrix(2, 2)) == 0);
  CHECK(rank(SparseMatrix::from_rows({{1, 2}, {2, 4}})) == 1);
}

TEST_CASE("rank agrees with the minor oracle and with the transpose") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 200; ++t) {
    const std::size_t r = 1 + rng() % 4, c = 1 + rng() % 4;
    const auto m = random_matrix(rng, r, c);
    const auto k = rank(m);
    CHECK(k == rank(m.transpose()));
    CHECK(k == minor_rank(m));
  }
}

TEST_CASE("negative definite examples") {
  CHECK(is_negative_definite(SparseMatrix::identity(2).scaled(-1)));
  CHECK_FALSE(is_negative_definite(SparseMatrix::identity(2)));
  CHECK_FALSE(is_negative_definite(SparseMatrix::from_rows({{-1, 0}, {0, 0}})));
  CHECK_THROWS_AS(is_negative_definite(SparseMatrix::from_rows({{-1, 1}, {0, -1}})), NonSymmetric);
  // -[[2,1],[1,2]] has minors -2, 3
  CHECK(is_negative_definite(SparseMatrix::from_rows({{-2, -1}, {-1, -2}})));
  CHECK_FALSE(is_negative_definite(SparseMatrix::from_rows({{-1, -2}, {-2, -1}})));
}

TEST_CASE("solve_linear examples") {
  auto x = solve_linear(SparseMatrix::identity(2), DenseVector{3, 5});
  REQUIRE(x);
  CHECK(*x == DenseVector{3, 5});
  CHECK_FALSE(solve_linear(SparseMatrix(1, 1), DenseVector{1}));
  auto y = solve_linear(SparseMatrix::from_rows({{2, 0}, {0, 4}}), DenseVector{1, 1});
  REQUIRE(y);
  CHECK(*y == DenseVector{Rational(1, 2), Rational(1, 4)});
}

TEST_CASE("solve_linear solutions satisfy the system") {
  std::mt19937_64 rng(23);
  int solved = 0;
  for (int t = 0; t < 300; ++t) {
    const std::size_t r = 1 + rng() % 5, c = 1 + rng() % 5;
    const auto a = random_matrix(rng, r, c);
    DenseVector b(r);
    for (std::size_t i = 0; i < r; ++i) b[i] = static_cast<long>(rng() % 7) - 3;
    if (auto x = solve_linear(a, b)) {
      CHECK(a.apply(*x) == b);
      ++solved;
    } else {
      // inconsistent: rank of [a | b] exceeds rank of a
      SparseMatrix ab(r, c + 1);
      for (const auto& [k, v] : a.entries()) ab.set(k.first, k.second, v);
      for (std::size_t i = 0; i < r; ++i) ab.set(i, c, b[i]);
      CHECK(rank(ab) == rank(a) + 1);
    }
  }
  CHECK(solved > 0);
}

TEST_CASE("null space vectors are independent solutions") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 100; ++t) {
    const std::size_t r = 1 + rng() % 4, c = 1 + rng() % 5;
    const auto m = random_matrix(rng, r, c);
    const auto ns = null_space(m);
    CHECK(ns.size() + rank(m) == c);
    for (const auto& v : ns) CHECK(m.apply(v).is_zero());
  }
}

}  // TEST_SUITE
