#include <gtest/gtest.h>

#include <random>

#include "lpi/words.hpp"
#include "test_util.hpp"

using namespace lpi;

namespace {

const Ring Q = Ring::rationals();
const Ring GF3 = Ring::prime_field(3);

GroupWord w(std::vector<Syllable> s) { return GroupWord::from_syllables(s); }

GroupWord random_word(std::mt19937_64& rng, std::size_t vars, std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> len(0, max_len), var(1, vars);
  std::uniform_int_distribution<int> sign(0, 1);
  std::vector<Syllable> s;
  const std::size_t n = len(rng);
  for (std::size_t i = 0; i < n; ++i) s.push_back({var(rng), sign(rng) ? 1 : -1});
  return GroupWord::from_syllables(s);
}

LaurentPolynomial random_poly(std::mt19937_64& rng, const Ring& ring, std::size_t vars) {
  std::uniform_int_distribution<long long> coeff(-4, 4);
  LaurentPolynomial p(ring);
  for (int i = 0; i < 4; ++i) p.add_term(random_word(rng, vars, 5), Scalar(ring, coeff(rng)));
  return p;
}

}  // namespace

TEST(Words, Multiply) {
  EXPECT_EQ(w({{1, 1}, {2, 1}}) * w({{2, -1}, {1, 1}}), GroupWord::generator(1, 2));
  EXPECT_TRUE((GroupWord::generator(1) * GroupWord::generator(1, -1)).is_identity());
  EXPECT_EQ(w({{1, 2}, {2, 1}}) * GroupWord::generator(2, 2), w({{1, 2}, {2, 3}}));
}

TEST(Words, Inverse) {
  EXPECT_EQ(w({{1, 1}, {2, -1}}).inverse(), w({{2, 1}, {1, -1}}));
  EXPECT_TRUE(GroupWord{}.inverse().is_identity());
  EXPECT_EQ(GroupWord::generator(1, 3).inverse(), GroupWord::generator(1, -3));
}

TEST(Words, ExponentSums) {
  const GroupWord comm = w({{1, 1}, {2, 1}, {1, -1}, {2, -1}});
  EXPECT_EQ(comm.exp_sum(1), 0);
  const GroupWord u = w({{1, 2}, {2, -2}});
  EXPECT_EQ(u.total_exp_sum(), 0);
  EXPECT_EQ(u.exp_sum(1), 2);
  EXPECT_EQ(GroupWord::generator(1, 4).total_exp_sum(), 4);
}

TEST(Words, FromSyllablesReduces) {
  const GroupWord x = w({{1, 2}, {1, -2}, {2, 0}, {3, 1}, {3, 1}});
  ASSERT_EQ(x.syllables().size(), 1u);
  EXPECT_EQ(x.syllables()[0], (Syllable{3, 2}));
  EXPECT_EQ(x.length(), 2u);
  EXPECT_EQ(x.to_string(), "x3^2");
  EXPECT_EQ(GroupWord{}.to_string(), "1");
  EXPECT_EQ(w({{1, 2}, {2, -1}}).to_string(), "x1^2*x2^-1");
}

TEST(Words, GroupLaws) {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 500; ++t) {
    const GroupWord a = random_word(rng, 3, 8), b = random_word(rng, 3, 8), c = random_word(rng, 3, 8);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_TRUE((a * a.inverse()).is_identity());
    EXPECT_EQ(GroupWord::from_syllables(a.syllables()), a);
    for (std::size_t v = 1; v <= 3; ++v) EXPECT_EQ((a * b).exp_sum(v), a.exp_sum(v) + b.exp_sum(v));
    const auto& s = a.syllables();
    for (std::size_t i = 0; i < s.size(); ++i) {
      EXPECT_NE(s[i].exponent, 0);
      if (i > 0) {
        EXPECT_NE(s[i].variable, s[i - 1].variable);
      }
    }
  }
}

TEST(Words, CanonicalOrder) {
  EXPECT_LT(GroupWord{}, GroupWord::generator(2));
  EXPECT_LT(GroupWord::generator(1, -1), GroupWord::generator(1, 1));
  EXPECT_LT(GroupWord::generator(2), GroupWord::generator(1, 2));
}

TEST(Poly, ParseExamples) {
  const LaurentPolynomial p = parse_poly("1 - x1^4", Q);
  ASSERT_EQ(p.terms().size(), 2u);
  EXPECT_EQ(p.constant_term(), Scalar(Q, 1));
  EXPECT_EQ(p.coefficient(GroupWord::generator(1, 4)), Scalar(Q, -1));

  const LaurentPolynomial c = parse_poly("x1*x2 - x2*x1", GF3);
  ASSERT_EQ(c.terms().size(), 2u);
  EXPECT_EQ(c.coefficient(w({{1, 1}, {2, 1}})), Scalar(GF3, 1));
  EXPECT_EQ(c.coefficient(w({{2, 1}, {1, 1}})), Scalar(GF3, 2));

  EXPECT_LPI_ERROR(parse_poly("x1 - x1", Q), ErrorKind::ZeroPolynomial);
  EXPECT_LPI_ERROR(parse_poly("3 - 3", GF3), ErrorKind::ZeroPolynomial);
}

TEST(Poly, ParseGrammar) {
  const LaurentPolynomial p = parse_poly("2/3*x1*x2^-1 - x2", Q);
  EXPECT_EQ(p.coefficient(w({{1, 1}, {2, -1}})), Scalar(Q, mpq_class(2, 3)));
  EXPECT_EQ(parse_poly("  -x1 +  5 ", Q).constant_term(), Scalar(Q, 5));
  EXPECT_EQ(parse_poly("x1^0", Q), LaurentPolynomial::constant(Scalar::one(Q)));
  EXPECT_EQ(parse_poly("x1*x1^-1", Q), LaurentPolynomial::constant(Scalar::one(Q)));
  EXPECT_EQ(parse_poly("4", Ring::integers()).constant_term(), Scalar(Ring::integers(), 4));
}

TEST(Poly, SyntaxErrorsCarryPositions) {
  const auto position = [](std::string_view text) {
    try {
      parse_poly(text, Q);
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::SyntaxError) << text;
      return e.position();
    }
    ADD_FAILURE() << "no error for " << text;
    return Error::npos;
  };
  EXPECT_EQ(position("1 - y1"), 4u);
  EXPECT_EQ(position("1 -"), 3u);
  EXPECT_EQ(position("x0"), 1u);
  EXPECT_EQ(position("x1^"), 3u);
  EXPECT_EQ(position("x1 x2"), 3u);
  EXPECT_EQ(position("2*"), 2u);
}

TEST(Poly, PrintParseRoundTrip) {
  std::mt19937_64 rng(3);
  for (const Ring& ring : {Q, GF3, Ring::prime_field(7)}) {
    for (int t = 0; t < 200; ++t) {
      const LaurentPolynomial p = random_poly(rng, ring, 3);
      if (p.is_zero()) continue;
      EXPECT_EQ(parse_poly(p.to_string(), ring), p) << p.to_string();
    }
  }
  EXPECT_EQ(parse_poly("1 - x1^4", Q).to_string(), "1 - x1^4");
  EXPECT_EQ(parse_poly("-x2 + 2/3*x1*x2^-1", Q).to_string(), "-x2 + 2/3*x1*x2^-1");
  EXPECT_EQ(LaurentPolynomial(Q).to_string(), "0");
}

TEST(Poly, SubstitutePower) {
  const LaurentPolynomial p = parse_poly("1 - x1^2*x2^-2", Q);
  EXPECT_EQ(substitute_power(p, 1, 3), parse_poly("1 - x1^6*x2^-2", Q));
  EXPECT_EQ(substitute_power(p, 2, 1), p);
  const LaurentPolynomial q = parse_poly("1 - x1^4", Q);
  EXPECT_EQ(substitute_power(q, 2, 5), q);
}

TEST(Poly, ReduceToTwoVariables) {
  EXPECT_EQ(reduce_to_two_variables(parse_poly("1 - x3", Q)), parse_poly("1 - x1^-3*x2*x1^3", Q));
  EXPECT_EQ(reduce_to_two_variables(parse_poly("1 - x1^2", Q)), parse_poly("1 - x1^-1*x2^2*x1", Q));
  const LaurentPolynomial c = LaurentPolynomial::constant(Scalar(Q, 5));
  EXPECT_EQ(reduce_to_two_variables(c), c);
}

TEST(Poly, Admissibility) {
  EXPECT_TRUE(is_admissible(parse_poly("1 - x1^4", Q)));
  const auto report = diagnose_admissibility(parse_poly("1 - x1*x2*x1^-1*x2^-1", Q));
  EXPECT_FALSE(report.admissible);
  ASSERT_EQ(report.offenders().size(), 1u);
  EXPECT_EQ(report.offenders()[0], w({{1, 1}, {2, 1}, {1, -1}, {2, -1}}));
  // x1 x2^-1 has total sum 0 but nonzero sum in x1.
  EXPECT_TRUE(is_admissible(parse_poly("1 - x1*x2^-1", Q)));
}

TEST(Poly, EvaluateExamples) {
  const Algebra m2 = Algebra::matrix(2, Q);
  EXPECT_TRUE(evaluate(parse_poly("1 - x1^4", Q), {{1, m2.one()}}).is_zero());

  const Algebra t2 = Algebra::triangular(2, Ring::prime_field(2));
  const AlgebraElement u = t2.one() + t2.matrix_unit(1, 2);
  EXPECT_TRUE((u * u).is_one());
  EXPECT_TRUE(evaluate(parse_poly("1 - x1^2", Ring::prime_field(2)), {{1, u}}).is_zero());

  EXPECT_LPI_ERROR(evaluate(parse_poly("x1^-1", Q), {{1, m2.matrix_unit(1, 2)}}), ErrorKind::NotAUnit);
  // Positive exponents accept non-units.
  EXPECT_EQ(evaluate(parse_poly("x1^2 + x1", Q), {{1, m2.matrix_unit(1, 2)}}), m2.matrix_unit(1, 2));
}

TEST(Poly, EvaluateCoercesIntegerCoefficients) {
  const Algebra m = Algebra::matrix(2, Ring::prime_field(5));
  EXPECT_TRUE(evaluate(parse_poly("5 - 5*x1", Ring::integers()), {{1, m.one()}}).is_zero());
  EXPECT_LPI_ERROR(evaluate(parse_poly("1 - x1", Q), {{1, m.one()}}), ErrorKind::RingMismatch);
}

TEST(Poly, EvaluationIsAHomomorphism) {
  std::mt19937_64 rng(5);
  for (const char* spec : {"matrix:2:q", "tri:3:gf5", "grpalg:s3:gf7"}) {
    const Algebra alg = Algebra::parse(spec);
    const Ring ring = alg.ring();
    for (int t = 0; t < 40; ++t) {
      const LaurentPolynomial p = random_poly(rng, ring, 2), q = random_poly(rng, ring, 2);
      Rng arng(t);
      Assignment sigma{{1, random_unit(alg, arng)}, {2, random_unit(alg, arng)}};
      const AlgebraElement pv = p.is_zero() ? alg.zero() : evaluate(p, sigma);
      const AlgebraElement qv = q.is_zero() ? alg.zero() : evaluate(q, sigma);
      if (!(p + q).is_zero()) {
        EXPECT_EQ(evaluate(p + q, sigma), pv + qv);
      }
      if (!(p * q).is_zero()) {
        EXPECT_EQ(evaluate(p * q, sigma), pv * qv);
      }
    }
  }
}

TEST(Poly, SubstitutePowerCompatibility) {
  std::mt19937_64 rng(6);
  const Algebra alg = Algebra::parse("matrix:2:gf7");
  for (int t = 0; t < 40; ++t) {
    const LaurentPolynomial p = random_poly(rng, alg.ring(), 2);
    if (p.is_zero()) continue;
    Rng arng(100 + t);
    const AlgebraElement x1 = random_unit(alg, arng), x2 = random_unit(alg, arng);
    for (long long k : {1, 2, 3}) {
      const LaurentPolynomial sub = substitute_power(p, 1, k);
      const AlgebraElement lhs = sub.is_zero() ? alg.zero() : evaluate(sub, {{1, x1}, {2, x2}});
      EXPECT_EQ(lhs, evaluate(p, {{1, power(x1, k)}, {2, x2}}));
    }
  }
}

TEST(Poly, ReductionPreservesIdentities) {
  // 1 - x1^2 and 1 - x1^2 x2^2 x3^2 hold on U(T2(GF2)) (a group of order 2); so must their reductions.
  const Algebra t2 = Algebra::triangular(2, Ring::prime_field(2));
  const auto units = enumerate_units(t2);
  for (const char* text : {"1 - x1^2", "1 - x1^2*x2^2*x3^2", "x3*x1 - x1*x3"}) {
    const LaurentPolynomial p = parse_poly(text, Ring::prime_field(2));
    const LaurentPolynomial r = reduce_to_two_variables(p);
    for (const auto& a : units)
      for (const auto& b : units) EXPECT_TRUE(evaluate(r, {{1, a}, {2, b}}).is_zero()) << text;
  }
  // Over U(T3(GF2)) (dihedral of order 8, exponent 4).
  const Algebra t3 = Algebra::triangular(3, Ring::prime_field(2));
  const auto u3 = enumerate_units(t3);
  const LaurentPolynomial p = parse_poly("1 - x3^4", Ring::prime_field(2));
  const LaurentPolynomial r = reduce_to_two_variables(p);
  for (const auto& a : u3)
    for (const auto& b : u3) EXPECT_TRUE(evaluate(r, {{1, a}, {2, b}}).is_zero());
}

TEST(Poly, EvaluatorNeedsOnlyOccurringVariables) {
  const Algebra m2 = Algebra::matrix(2, Q);
  const LaurentPolynomial p = parse_poly("1 - x3^2", Q);
  EXPECT_EQ(evaluate(p, {{3, m2.one()}}), m2.zero());
  EXPECT_LPI_ERROR(evaluate(p, Assignment{}), ErrorKind::InvalidArgument);
}
