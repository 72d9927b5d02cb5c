#include <gtest/gtest.h>

#include <random>

#include "lpi/scalars.hpp"
#include "test_util.hpp"

using namespace lpi;

namespace {

const Ring Q = Ring::rationals();
const Ring Z = Ring::integers();
const Ring GF5 = Ring::prime_field(5);

Scalar q(long n, long d = 1) { return Scalar(Q, mpq_class(n, d)); }

}  // namespace

TEST(Ring, ParseAndPrint) {
  EXPECT_EQ(Ring::parse("q"), Q);
  EXPECT_EQ(Ring::parse("z"), Z);
  EXPECT_EQ(Ring::parse("gf7").modulus(), 7u);
  EXPECT_EQ(Ring::parse("gf7").to_string(), "gf7");
  EXPECT_LPI_ERROR(Ring::parse("gf6"), ErrorKind::InvalidArgument);
  EXPECT_LPI_ERROR(Ring::parse("gf"), ErrorKind::SpecSyntaxError);
  EXPECT_LPI_ERROR(Ring::parse("r"), ErrorKind::SpecSyntaxError);
  EXPECT_LPI_ERROR(Ring::prime_field(1), ErrorKind::InvalidArgument);
}

TEST(Scalar, InverseModFive) { EXPECT_EQ(Scalar(GF5, 2).inverse(), Scalar(GF5, 3)); }

TEST(Scalar, RationalSum) { EXPECT_EQ(q(1, 2) + q(1, 3), q(5, 6)); }

TEST(Scalar, ZeroNotInvertible) {
  EXPECT_LPI_ERROR(Scalar::zero(Q).inverse(), ErrorKind::NotInvertible);
  EXPECT_LPI_ERROR(Scalar::zero(GF5).inverse(), ErrorKind::NotInvertible);
}

TEST(Scalar, IntegersOnlyInvertUnits) {
  EXPECT_EQ(Scalar(Z, -1).inverse(), Scalar(Z, -1));
  EXPECT_EQ(Scalar(Z, 1).inverse(), Scalar(Z, 1));
  EXPECT_LPI_ERROR(Scalar(Z, 2).inverse(), ErrorKind::NotInvertible);
  EXPECT_EQ(Scalar(Z, 2).embed_to_rationals().inverse(), q(1, 2));
}

TEST(Scalar, RingMismatch) {
  EXPECT_LPI_ERROR(q(1) + Scalar(GF5, 1), ErrorKind::RingMismatch);
  EXPECT_LPI_ERROR(q(1) * Scalar(Z, 1), ErrorKind::RingMismatch);
  EXPECT_EQ(Scalar(Z, 7).coerce_to(GF5), Scalar(GF5, 2));
  EXPECT_LPI_ERROR(q(1, 2).coerce_to(GF5), ErrorKind::RingMismatch);
}

TEST(Scalar, CanonicalForms) {
  EXPECT_EQ(Scalar(GF5, -1).residue(), 4);
  EXPECT_EQ(Scalar(GF5, 12).to_string(), "2");
  EXPECT_EQ(q(4, -6).to_string(), "-2/3");
  EXPECT_EQ(q(4, -6).rational().get_den(), 3);
}

TEST(Scalar, Parse) {
  EXPECT_EQ(Scalar::parse("-3/9", Q), q(-1, 3));
  EXPECT_EQ(Scalar::parse("7", GF5), Scalar(GF5, 2));
  EXPECT_EQ(Scalar::parse("1/2", GF5), Scalar(GF5, 3));
  EXPECT_LPI_ERROR(Scalar::parse("1/0", Q), ErrorKind::NotInvertible);
  EXPECT_LPI_ERROR(Scalar::parse("x", Q), ErrorKind::SyntaxError);
  EXPECT_LPI_ERROR(Scalar::parse("1/2", Z), ErrorKind::NotInvertible);
}

TEST(Scalar, ArbitraryPrecision) {
  Scalar x = Scalar(Z, 3).pow(100);
  mpz_class expected;
  mpz_ui_pow_ui(expected.get_mpz_t(), 3, 100);
  EXPECT_EQ(x.to_string(), expected.get_str());
  EXPECT_EQ(q(2, 3).pow(-2), q(9, 4));
}

TEST(DistinctScalars, Examples) {
  const auto pts = distinct_scalars(Ring::prime_field(7), 3);
  ASSERT_EQ(pts.size(), 3u);
  for (long long i = 0; i < 3; ++i) EXPECT_EQ(pts[i], Scalar(Ring::prime_field(7), i + 1));
  EXPECT_LPI_ERROR(distinct_scalars(Ring::prime_field(2), 3), ErrorKind::RingTooSmall);
  EXPECT_EQ(distinct_scalars(Q, 4).back(), q(4));
  EXPECT_EQ(distinct_scalars(Ring::prime_field(7), 6).size(), 6u);
  EXPECT_LPI_ERROR(distinct_scalars(Ring::prime_field(7), 7), ErrorKind::RingTooSmall);
}

TEST(DistinctScalars, NoDuplicatesNoZeros) {
  for (const Ring& r : {Q, Ring::prime_field(11), Ring::prime_field(101)}) {
    const auto pts = distinct_scalars(r, 10);
    for (std::size_t i = 0; i < pts.size(); ++i) {
      EXPECT_FALSE(pts[i].is_zero());
      for (std::size_t j = 0; j < i; ++j) EXPECT_NE(pts[i], pts[j]);
    }
  }
}

class FieldAxioms : public ::testing::TestWithParam<Ring> {};

TEST_P(FieldAxioms, RandomSamples) {
  const Ring ring = GetParam();
  std::mt19937_64 rng(42);
  std::uniform_int_distribution<long> num(-20, 20);
  std::uniform_int_distribution<long> den(1, 20);
  auto draw = [&] {
    return ring.is_finite() ? Scalar(ring, static_cast<long long>(num(rng))) : Scalar(ring, mpq_class(num(rng), den(rng)));
  };
  for (int t = 0; t < 300; ++t) {
    const Scalar x = draw(), y = draw(), z = draw();
    EXPECT_EQ((x + y) + z, x + (y + z));
    EXPECT_EQ((x * y) * z, x * (y * z));
    EXPECT_EQ(x * y, y * x);
    EXPECT_EQ(x + y, y + x);
    EXPECT_EQ(x * (y + z), x * y + x * z);
    EXPECT_TRUE((x - x).is_zero());
    if (!x.is_zero()) {
      EXPECT_TRUE((x * x.inverse()).is_one());
    }
    if (!ring.is_finite()) {
      const mpq_class v = (x * y + z).rational();
      mpz_class g;
      mpz_gcd(g.get_mpz_t(), v.get_num_mpz_t(), v.get_den_mpz_t());
      EXPECT_EQ(g, 1);
      EXPECT_GT(v.get_den(), 0);
    } else {
      EXPECT_GE((x * y).residue(), 0);
      EXPECT_LT((x * y).residue(), static_cast<std::int64_t>(ring.modulus()));
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Rings, FieldAxioms,
                         ::testing::Values(Ring::rationals(), Ring::prime_field(2), Ring::prime_field(7),
                                           Ring::prime_field(2147483647)));
