#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "quartic/errors.hpp"
#include "quartic/matrix.hpp"
#include "quartic/rational.hpp"

using namespace quartic;

TEST(Rational, ParsesAndPrintsCanonically) {
  EXPECT_EQ(parse_rational("14/1"), Rational(14));
  EXPECT_EQ(parse_rational("-6/4"), Rational(-3, 2));
  EXPECT_EQ(to_string(parse_rational("6/4")), "3/2");
  EXPECT_EQ(to_string(Rational(-7)), "-7");
  EXPECT_TRUE(is_integer(ratio(8, 4)));
  EXPECT_FALSE(is_integer(Rational(1, 3)));
}

TEST(Rational, RejectsMalformedText) {
  for (const char* bad : {"", "1.5", "1/0", "abc", "1/", "/2", " 3"}) EXPECT_THROW(parse_rational(bad), ParseError) << bad;
}

namespace {

Matrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, int spread) {
  std::uniform_int_distribution<int> d(-spread, spread);
  Matrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = d(rng);
  return m;
}

// Leibniz expansion; independent of elimination.
Rational leibniz(const Matrix& m) {
  std::vector<std::size_t> p(m.rows());
  std::iota(p.begin(), p.end(), 0);
  Rational total = 0;
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < p.size(); ++i)
      for (std::size_t j = i + 1; j < p.size(); ++j) inversions += p[i] > p[j];
    Rational term = inversions % 2 ? -1 : 1;
    for (std::size_t i = 0; i < p.size(); ++i) term *= m(i, p[i]);
    total += term;
  } while (std::next_permutation(p.begin(), p.end()));
  return total;
}

}  // namespace

TEST(Matrix, DeterminantMatchesLeibniz) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + trial % 5;
    const Matrix m = random_matrix(rng, n, n, 3);
    EXPECT_EQ(determinant(m), leibniz(m));
  }
}

TEST(Matrix, KernelVectorsAreAnnihilatedAndRankNullityHolds) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t r = 1 + trial % 4, c = 1 + (trial / 4) % 6;
    const Matrix m = random_matrix(rng, r, c, 1);
    const auto ker = kernel(m);
    EXPECT_EQ(rank(m) + ker.size(), c);
    for (const auto& v : ker) {
      const auto mv = m * v;
      EXPECT_TRUE(std::all_of(mv.begin(), mv.end(), [](const Rational& x) { return x == 0; }));
    }
  }
}

TEST(Matrix, SolveReturnsAnExactSolutionOrDetectsInconsistency) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 200; ++trial) {
    const Matrix m = random_matrix(rng, 4, 3, 2);
    std::vector<Rational> b(4);
    for (auto& x : b) x = static_cast<long>(rng() % 7) - 3;
    const auto x = solve(m, b);
    Matrix aug(4, 4);
    for (std::size_t i = 0; i < 4; ++i) {
      for (std::size_t j = 0; j < 3; ++j) aug(i, j) = m(i, j);
      aug(i, 3) = b[i];
    }
    EXPECT_EQ(x.has_value(), rank(aug) == rank(m));
    if (x) EXPECT_EQ(m * *x, b);
  }
}

TEST(Matrix, ProductTransposeAndPrincipal) {
  const Matrix a{{1, 2}, {3, 4}};
  const Matrix b{{0, 1}, {1, 0}};
  EXPECT_EQ(a * b, (Matrix{{2, 1}, {4, 3}}));
  EXPECT_EQ(a.transposed(), (Matrix{{1, 3}, {2, 4}}));
  EXPECT_TRUE((b * b).is_identity());
  EXPECT_FALSE(a.is_symmetric());
  const Matrix c{{1, 2, 3}, {4, 5, 6}, {7, 8, 9}};
  EXPECT_EQ(c.principal({0, 2}), (Matrix{{1, 3}, {7, 9}}));
  EXPECT_EQ(rank(c), 2u);
}
