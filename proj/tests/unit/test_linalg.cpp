#include <gtest/gtest.h>

#include <random>

#include "lpi/linalg.hpp"
#include "test_util.hpp"

using namespace lpi;

namespace {

DenseMatrix random_matrix(const Ring& ring, std::size_t r, std::size_t c, std::mt19937_64& rng) {
  std::uniform_int_distribution<long long> d(-3, 3);
  DenseMatrix m(ring, r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m.at(i, j) = Scalar(ring, d(rng));
  return m;
}

}  // namespace

TEST(Linalg, InverseRoundTrip) {
  std::mt19937_64 rng(1);
  for (const Ring& ring : {Ring::rationals(), Ring::prime_field(7)}) {
    for (int t = 0; t < 50; ++t) {
      const DenseMatrix m = random_matrix(ring, 4, 4, rng);
      const auto inv = inverse(m);
      if (rank(m) == 4) {
        ASSERT_TRUE(inv.has_value());
        EXPECT_EQ(m * *inv, DenseMatrix::identity(ring, 4));
        EXPECT_EQ(*inv * m, DenseMatrix::identity(ring, 4));
      } else {
        EXPECT_FALSE(inv.has_value());
      }
    }
  }
}

TEST(Linalg, NullspaceAndSolve) {
  std::mt19937_64 rng(2);
  const Ring ring = Ring::rationals();
  for (int t = 0; t < 30; ++t) {
    const DenseMatrix m = random_matrix(ring, 3, 5, rng);
    const auto basis = nullspace(m);
    EXPECT_EQ(basis.size() + rank(m), 5u);
    for (const auto& v : basis) {
      DenseMatrix col(ring, 5, 1);
      for (std::size_t i = 0; i < 5; ++i) col.at(i, 0) = v[i];
      const DenseMatrix prod = m * col;
      for (std::size_t i = 0; i < 3; ++i) EXPECT_TRUE(prod.at(i, 0).is_zero());
    }
    std::vector<Scalar> rhs{Scalar(ring, 1), Scalar(ring, 2), Scalar(ring, 3)};
    const auto x = solve(m, rhs);
    if (x) {
      DenseMatrix col(ring, 5, 1);
      for (std::size_t i = 0; i < 5; ++i) col.at(i, 0) = (*x)[i];
      const DenseMatrix prod = m * col;
      for (std::size_t i = 0; i < 3; ++i) EXPECT_EQ(prod.at(i, 0), rhs[i]);
    }
  }
}

TEST(Linalg, InconsistentSystem) {
  const Ring ring = Ring::prime_field(3);
  DenseMatrix m(ring, 2, 1);
  m.at(0, 0) = Scalar(ring, 1);
  m.at(1, 0) = Scalar(ring, 1);
  EXPECT_FALSE(solve(m, {Scalar(ring, 0), Scalar(ring, 1)}).has_value());
}
