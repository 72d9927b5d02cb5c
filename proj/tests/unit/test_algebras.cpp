#include <gtest/gtest.h>

#include <set>

#include "lpi/algebras.hpp"
#include "test_util.hpp"

using namespace lpi;

namespace {

const Ring GF2 = Ring::prime_field(2);
const Ring GF3 = Ring::prime_field(3);
const Ring Q = Ring::rationals();

// Two-sided inverse by exhaustive search.
bool brute_is_unit(const AlgebraElement& x, const std::vector<AlgebraElement>& all) {
  for (const auto& y : all)
    if ((x * y).is_one() && (y * x).is_one()) return true;
  return false;
}

}  // namespace

TEST(Algebras, ParseSpecs) {
  EXPECT_EQ(Algebra::parse("tri:3:gf2").dimension(), 6u);
  EXPECT_EQ(Algebra::parse("matrix:2:q").dimension(), 4u);
  EXPECT_EQ(Algebra::parse("grpalg:q8:q").dimension(), 8u);
  EXPECT_EQ(Algebra::parse("grpalg:q8*c3:gf5").dimension(), 24u);
  EXPECT_EQ(Algebra::parse("tri:3:gf2").to_string(), "tri:3:gf2");
  EXPECT_LPI_ERROR(Algebra::parse("matrix:0:q"), ErrorKind::SpecSyntaxError);
  EXPECT_LPI_ERROR(Algebra::parse("cube:2:q"), ErrorKind::SpecSyntaxError);
  EXPECT_LPI_ERROR(Algebra::parse("matrix:2"), ErrorKind::SpecSyntaxError);
  EXPECT_LPI_ERROR(Algebra::parse("matrix:2:gf4"), ErrorKind::InvalidArgument);
}

TEST(Algebras, MatrixUnitProducts) {
  const Algebra m2 = Algebra::matrix(2, Q);
  EXPECT_EQ(m2.matrix_unit(1, 2) * m2.matrix_unit(2, 1), m2.matrix_unit(1, 1));
  EXPECT_TRUE((m2.matrix_unit(1, 2) * m2.matrix_unit(1, 2)).is_zero());
  EXPECT_LPI_ERROR(Algebra::triangular(2, Q).matrix_unit(2, 1), ErrorKind::InvalidArgument);
}

TEST(Algebras, GroupElementsInvert) {
  const Algebra kg = Algebra::parse("grpalg:s3:gf5");
  for (std::size_t g = 0; g < 6; ++g)
    EXPECT_TRUE((kg.group_element(g) * kg.group_element(kg.group().inverse(g))).is_one());
}

TEST(Algebras, RingMismatchAcrossAlgebras) {
  const Algebra a = Algebra::matrix(2, Q);
  const Algebra b = Algebra::matrix(2, GF3);
  EXPECT_LPI_ERROR(a.one() + b.one(), ErrorKind::DescriptorMismatch);
  EXPECT_LPI_ERROR(a.one() * Algebra::matrix(3, Q).one(), ErrorKind::DescriptorMismatch);
}

TEST(Algebras, UnitsAndInverses) {
  const Algebra m2 = Algebra::matrix(2, Q);
  const AlgebraElement x = m2.one() + m2.matrix_unit(1, 2);
  ASSERT_TRUE(is_unit(x));
  EXPECT_EQ(inverse(x), m2.one() - m2.matrix_unit(1, 2));
  EXPECT_FALSE(is_unit(m2.matrix_unit(1, 1)));
  EXPECT_LPI_ERROR(inverse(m2.matrix_unit(1, 1)), ErrorKind::NotAUnit);

  const Algebra c2 = Algebra::parse("grpalg:c2:gf2");
  const AlgebraElement y = c2.one() + c2.group_element(1);
  EXPECT_TRUE((y * y).is_zero());
  EXPECT_FALSE(is_unit(y));
}

TEST(Algebras, Counts) {
  const Algebra t2 = Algebra::triangular(2, GF2);
  EXPECT_EQ(enumerate_elements(t2).size(), 8u);
  EXPECT_EQ(enumerate_units(t2).size(), 2u);
  const Algebra m2 = Algebra::matrix(2, GF2);
  EXPECT_EQ(enumerate_elements(m2).size(), 16u);
  EXPECT_EQ(enumerate_units(m2).size(), 6u);
  EXPECT_EQ(enumerate_units(Algebra::matrix(2, GF3)).size(), 48u);
  EXPECT_EQ(enumerate_units(Algebra::triangular(3, GF2)).size(), 8u);
  EXPECT_EQ(*Algebra::parse("tri:3:gf2").cardinality(), 64u);
  EXPECT_FALSE(Algebra::parse("tri:3:q").cardinality());
  EXPECT_LPI_ERROR(enumerate_elements(Algebra::matrix(2, Q)), ErrorKind::TooLarge);
  EXPECT_LPI_ERROR(enumerate_elements(Algebra::matrix(3, GF3), 1000), ErrorKind::TooLarge);
}

TEST(Algebras, EnumerationOrderFirstBasisFastest) {
  const Algebra m2 = Algebra::matrix(2, GF2);
  const ElementSpace space(m2);
  EXPECT_TRUE(space.at(0).is_zero());
  EXPECT_EQ(space.at(1), m2.matrix_unit(1, 1));
  EXPECT_EQ(space.at(2), m2.matrix_unit(1, 2));
  EXPECT_EQ(space.at(3), m2.matrix_unit(1, 1) + m2.matrix_unit(1, 2));
  const auto all = space.materialize();
  EXPECT_EQ(std::set<std::string>([&] {
              std::set<std::string> s;
              for (const auto& x : all) s.insert(x.to_string());
              return s;
            }()).size(),
            16u);
}

TEST(Algebras, UnitTestAgreesWithBruteForce) {
  for (const char* spec : {"matrix:2:gf2", "tri:3:gf2", "tri:2:gf3", "grpalg:c2*c2:gf2", "grpalg:s3:gf2", "grpalg:c3:gf3", "matrix:2:gf3"}) {
    const Algebra alg = Algebra::parse(spec);
    const auto all = enumerate_elements(alg);
    ASSERT_LE(all.size(), 4096u);
    std::size_t units = 0;
    for (const auto& x : all) {
      const bool u = is_unit(x);
      EXPECT_EQ(u, brute_is_unit(x, all)) << spec << " " << x.to_string();
      if (u) {
        ++units;
        const AlgebraElement inv = inverse(x);
        EXPECT_TRUE((x * inv).is_one());
        EXPECT_TRUE((inv * x).is_one());
      }
    }
    EXPECT_EQ(units, enumerate_units(alg).size()) << spec;
  }
}

TEST(Algebras, GroupEmbeddingIsInjectiveHomomorphism) {
  for (const char* spec : {"c6", "s3", "q8", "d4", "s4", "q8*c3", "c2*c4"}) {
    const Algebra kg = Algebra::group_algebra(build_group(spec), Q, spec);
    const FiniteGroup& g = kg.group();
    std::set<std::string> images;
    for (std::size_t x = 0; x < g.order(); ++x) {
      images.insert(kg.group_element(x).to_string());
      EXPECT_TRUE(is_unit(kg.group_element(x)));
      for (std::size_t y = 0; y < g.order(); ++y)
        ASSERT_EQ(kg.group_element(x) * kg.group_element(y), kg.group_element(g.mul(x, y))) << spec;
    }
    EXPECT_EQ(images.size(), g.order());
  }
}

TEST(Algebras, SampledUnitClosureAndTriangularClosure) {
  for (const char* spec : {"matrix:3:q", "tri:4:gf7", "grpalg:s3:q", "matrix:2:gf5"}) {
    const Algebra alg = Algebra::parse(spec);
    Rng rng(11);
    for (int t = 0; t < 40; ++t) {
      const AlgebraElement u = random_unit(alg, rng);
      const AlgebraElement v = random_unit(alg, rng);
      EXPECT_TRUE(is_unit(u * v));
      EXPECT_TRUE(is_unit(inverse(u)));
      const AlgebraElement x = random_element(alg, rng);
      const AlgebraElement y = random_element(alg, rng);
      const AlgebraElement xy = x * y;
      if (alg.kind() != AlgebraKind::Triangular) continue;
      for (std::size_t i = 0; i < alg.size(); ++i)
        for (std::size_t j = 0; j < i; ++j) EXPECT_TRUE(xy.entry(i, j).is_zero());
    }
  }
}

TEST(Algebras, SamplingIsSeeded) {
  const Algebra alg = Algebra::parse("matrix:3:q");
  EXPECT_EQ(random_element(alg, 5), random_element(alg, 5));
  EXPECT_EQ(random_unit(alg, 9), random_unit(alg, 9));
  EXPECT_NE(random_element(alg, 5), random_element(alg, 6));
  SamplingOptions opts;
  opts.height = 2;
  Rng rng(3);
  for (int t = 0; t < 50; ++t) {
    const AlgebraElement x = random_element(alg, rng, opts);
    for (const auto& s : x.storage()) {
      EXPECT_LE(abs(s.rational().get_num()), 2);
      EXPECT_LE(s.rational().get_den(), 2);
    }
  }
}

TEST(Algebras, UnitSamplingCanBeExhausted) {
  const Algebra t = Algebra::parse("tri:2:gf2");
  SamplingOptions opts;
  opts.unit_retries = 1;
  bool threw = false;
  Rng rng(0);
  for (int i = 0; i < 50 && !threw; ++i) {
    try {
      random_unit(t, rng, opts);
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::SamplingExhausted);
      threw = true;
    }
  }
  EXPECT_TRUE(threw);
}

TEST(Algebras, Nilpotency) {
  const Algebra m2 = Algebra::matrix(2, Q);
  EXPECT_EQ(nilpotency_index(m2.matrix_unit(1, 2)), 2u);
  EXPECT_FALSE(is_nilpotent(m2.matrix_unit(1, 1)));
  EXPECT_EQ(nilpotency_index(m2.zero()), 1u);
  const Algebra t3 = Algebra::triangular(3, Q);
  Rng rng(4);
  for (int i = 0; i < 20; ++i) {
    AlgebraElement x = random_element(t3, rng);
    std::vector<Scalar> data = x.storage();
    for (std::size_t d = 0; d < 3; ++d) data[d * 3 + d] = Scalar::zero(Q);
    const auto idx = nilpotency_index(t3.from_storage(data));
    ASSERT_TRUE(idx);
    EXPECT_LE(*idx, 3u);
  }
}

TEST(Algebras, SquareZeroAndZeroDivisors) {
  const Algebra t2 = Algebra::triangular(2, GF2);
  const auto sq = square_zero_elements(t2);
  ASSERT_EQ(sq.size(), 2u);
  EXPECT_TRUE(sq[0].is_zero());
  EXPECT_EQ(sq[1], t2.matrix_unit(1, 2));

  const Algebra m2 = Algebra::matrix(2, GF2);
  const auto pairs = zero_divisor_pairs(m2);
  const auto has = [&](const AlgebraElement& b, const AlgebraElement& c) {
    for (const auto& [x, y] : pairs)
      if (x == b && y == c) return true;
    return false;
  };
  EXPECT_FALSE(has(m2.matrix_unit(1, 2), m2.matrix_unit(2, 1)));
  EXPECT_TRUE(has(m2.matrix_unit(1, 2), m2.matrix_unit(1, 2)));
  for (const auto& [b, c] : pairs) {
    EXPECT_FALSE(b.is_zero());
    EXPECT_FALSE(c.is_zero());
    EXPECT_TRUE((b * c).is_zero());
  }
  // Brute-force count.
  const auto all = enumerate_elements(m2);
  std::size_t count = 0, with_zero = 0;
  for (const auto& b : all)
    for (const auto& c : all)
      if ((b * c).is_zero()) {
        ++with_zero;
        if (!b.is_zero() && !c.is_zero()) ++count;
      }
  EXPECT_EQ(pairs.size(), count);
  EXPECT_EQ(zero_product_pairs(m2).size(), with_zero);
}

TEST(Algebras, RandomSpecialElements) {
  for (const char* spec : {"tri:4:gf7", "matrix:3:q", "tri:3:q", "grpalg:c4:gf2"}) {
    const Algebra alg = Algebra::parse(spec);
    Rng rng(8);
    for (int i = 0; i < 30; ++i) {
      const AlgebraElement a = random_square_zero(alg, rng);
      EXPECT_TRUE((a * a).is_zero()) << spec;
      const auto [b, c] = random_zero_product_pair(alg, rng);
      EXPECT_TRUE((b * c).is_zero()) << spec;
    }
  }
}

TEST(Algebras, AnnihilatorAndRightIdeal) {
  const Algebra t3 = Algebra::triangular(3, Q);
  const AlgebraElement e12 = t3.matrix_unit(1, 2);
  for (const auto& c : right_annihilator_basis(e12)) EXPECT_TRUE((e12 * c).is_zero());
  EXPECT_EQ(right_annihilator_basis(e12).size(), 4u);
  EXPECT_EQ(right_ideal_basis({e12}).size(), 2u);
  EXPECT_EQ(right_ideal_basis({t3.one()}).size(), 6u);
}

TEST(Algebras, AveragingIdempotents) {
  const Algebra qc2 = Algebra::parse("grpalg:c2:q");
  const AlgebraElement e = averaging_idempotent(qc2, 1);
  const Scalar half = Scalar(Q, mpq_class(1, 2));
  EXPECT_EQ(e, half * (qc2.one() + qc2.group_element(1)));
  EXPECT_TRUE(is_idempotent(e));
  EXPECT_TRUE(averaging_idempotent(qc2, 0).is_one());
  EXPECT_LPI_ERROR(averaging_idempotent(Algebra::parse("grpalg:c4:gf2"), 1), ErrorKind::OrderNotInvertible);
}

TEST(Algebras, Centrality) {
  const Algebra m2 = Algebra::matrix(2, Q);
  EXPECT_TRUE(is_central(m2.scalar(Scalar(Q, 3))));
  EXPECT_FALSE(is_central(m2.matrix_unit(1, 1)));
  const Algebra qq8 = Algebra::parse("grpalg:q8:q");
  for (std::size_t g = 0; g < 8; ++g) {
    const AlgebraElement e = averaging_idempotent(qq8, g);
    for (std::size_t h = 0; h < 8; ++h) EXPECT_EQ(e * qq8.group_element(h), qq8.group_element(h) * e);
    EXPECT_TRUE(is_central(e));
  }
}

TEST(Algebras, Semiprime) {
  EXPECT_TRUE(is_semiprime_group_algebra(Algebra::parse("grpalg:q8:q")).semiprime);
  EXPECT_TRUE(is_semiprime_group_algebra(Algebra::parse("grpalg:q8:gf3")).semiprime);
  EXPECT_FALSE(is_semiprime_group_algebra(Algebra::parse("grpalg:q8:gf2")).semiprime);
}

TEST(Algebras, SemiprimeMatchesNilpotentIdealSearch) {
  // For char p dividing |G| the augmentation-sum element N = sum g spans a nilpotent ideal.
  for (const char* spec : {"grpalg:c2:gf2", "grpalg:c3:gf3", "grpalg:s3:gf3", "grpalg:s3:gf2"}) {
    const Algebra kg = Algebra::parse(spec);
    AlgebraElement n = kg.zero();
    for (std::size_t g = 0; g < kg.group().order(); ++g) n += kg.group_element(g);
    EXPECT_TRUE(is_central(n));
    EXPECT_TRUE((n * n).is_zero());
    EXPECT_FALSE(is_semiprime_group_algebra(kg).semiprime) << spec;
  }
}

TEST(Algebras, IdempotentScan) {
  // Q-free: GF(2)[c3] = GF2 x GF4 has 4 idempotents; M2(GF2) has 1 + 1 + 6.
  EXPECT_EQ(idempotents(Algebra::parse("grpalg:c3:gf2")).size(), 4u);
  EXPECT_EQ(idempotents(Algebra::matrix(2, GF2)).size(), 8u);
}

TEST(Algebras, ElementTextRoundTrip) {
  for (const char* spec : {"matrix:2:q", "tri:3:gf5", "grpalg:s3:q"}) {
    const Algebra alg = Algebra::parse(spec);
    Rng rng(2);
    for (int i = 0; i < 10; ++i) {
      const AlgebraElement x = random_element(alg, rng);
      EXPECT_EQ(parse_element(alg, x.to_string()), x);
    }
  }
  EXPECT_LPI_ERROR(parse_element(Algebra::matrix(2, Q), "[[1,0],[0,1]"), ErrorKind::SyntaxError);
  EXPECT_LPI_ERROR(parse_element(Algebra::matrix(2, Q), "[[1,0,0],[0,1,0]]"), ErrorKind::SyntaxError);
}

TEST(Algebras, Power) {
  const Algebra m2 = Algebra::matrix(2, Q);
  const AlgebraElement u = m2.one() + m2.matrix_unit(1, 2);
  EXPECT_EQ(power(u, -3), m2.one() - Scalar(Q, 3) * m2.matrix_unit(1, 2));
  EXPECT_TRUE(power(u, 0).is_one());
  EXPECT_LPI_ERROR(power(m2.matrix_unit(1, 2), -1), ErrorKind::NotAUnit);
}
