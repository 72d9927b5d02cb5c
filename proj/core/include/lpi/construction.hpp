#pragma once

// From an admissible Laurent identity P to the univariate polynomials f0, f2
// and f, plus numeric verification of the identities they satisfy.

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lpi/algebras.hpp"
#include "lpi/identity_engine.hpp"
#include "lpi/words.hpp"

namespace lpi {

/// Sparse univariate polynomial; exponents may be negative.
class UnivariatePoly {
 public:
  explicit UnivariatePoly(const Ring& ring) : ring_(ring) {}

  const Ring& ring() const noexcept { return ring_; }
  const std::map<long long, Scalar>& coefficients() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  Scalar coefficient(long long exponent) const;
  /// Largest exponent; throws ZeroPolynomial on zero.
  long long degree() const;
  /// Smallest exponent; throws ZeroPolynomial on zero.
  long long valuation() const;

  void add_term(long long exponent, const Scalar& c);
  /// Multiplies by s^shift.
  UnivariatePoly shifted(long long shift) const;

  /// Evaluation at an algebra element; exponents must be nonnegative.
  AlgebraElement evaluate(const AlgebraElement& x) const;

  /// `1 - s^4` style.
  std::string to_string(const std::string& variable = "s") const;

  friend bool operator==(const UnivariatePoly&, const UnivariatePoly&) = default;

 private:
  Ring ring_;
  std::map<long long, Scalar> coeffs_;
};

struct Normalization {
  std::size_t variable;
  long long k;
};

struct NormalizedPolynomial {
  LaurentPolynomial poly;
  /// More than two variables were folded into x1, x2 first.
  bool reduced;
  std::optional<Normalization> normalization;
};

/// Throws NotAdmissible (listing offenders) or MissingConstantTerm.
NormalizedPolynomial normalize_exponents(const LaurentPolynomial& p);

struct Collapse {
  UnivariatePoly f0;
  Scalar a1;
  long long l;
  long long r;
  std::vector<std::string> warnings;
};

/// Sets both variables to one unit. Throws AllNonconstantCancelled.
Collapse collapse_to_univariate(const LaurentPolynomial& normalized);

/// Multiplies by s^-l when l < 0.
UnivariatePoly shift_positive(const UnivariatePoly& f0);

/// Expands ab*f1((1+aua)(1+bauab))*au in the free monoid on {a, b, u} modulo
/// aa = bb = 0 and reads the result as a polynomial in abau. Throws
/// NonPowerMonomial if a surviving monomial is not a power of abau.
UnivariatePoly derive_f2(const UnivariatePoly& f1);

/// f(s) = sum c_j s^(2j+1) for f2(t) = sum c_j t^j.
UnivariatePoly derive_f(const UnivariatePoly& f2);

struct ConstructionReport {
  LaurentPolynomial input;
  NormalizedPolynomial normalized;
  UnivariatePoly f0;
  Scalar a1;
  long long l;
  long long r;
  UnivariatePoly f1;
  UnivariatePoly f2;
  UnivariatePoly f;
  /// deg f
  long long d;
  /// Effective degree of f1 (r, or r - l after shifting).
  long long r_effective;
  long long f2_bound;
  long long f_bound;
  std::vector<std::string> warnings;
};

ConstructionReport derive(const LaurentPolynomial& p);

/// ab*f1(alpha)*au - f2(abau) with alpha = (1+aua)(1+bauab).
AlgebraElement f2_identity_gap(const UnivariatePoly& f1, const UnivariatePoly& f2, const AlgebraElement& a,
                               const AlgebraElement& b, const AlgebraElement& u);

struct Theorem1Report {
  ConstructionReport construction;
  Verdict premise;
  /// f2(abau) = 0 for a^2 = b^2 = 0.
  Verdict f2_layer;
  /// f(bacu) = 0 for a^2 = bc = 0.
  Verdict f_layer;
  /// The premise failed, so the other layers prove nothing.
  bool vacuous;
};

Theorem1Report verify_theorem1(const Algebra& algebra, const LaurentPolynomial& p, const CheckMode& mode);
Verdict verify_f2_layer(const Algebra& algebra, const UnivariatePoly& f2, const CheckMode& mode);
Verdict verify_f_layer(const Algebra& algebra, const UnivariatePoly& f, const CheckMode& mode);

/// Components p_1..p_m of sum_i lambda^i p_i from its values at m distinct
/// nonzero points.
std::vector<AlgebraElement> solve_vandermonde(const std::vector<Scalar>& points,
                                              const std::vector<AlgebraElement>& values);

struct VandermondeResult {
  AlgebraElement s;  // bacu
  std::size_t d;
  std::vector<Scalar> points;
  std::vector<AlgebraElement> components;
  bool all_zero;
  /// 1-based index of the first nonzero component.
  std::optional<std::size_t> offending;
  /// s^d = 0
  bool power_zero;
  /// A component is nonzero.
  bool inconsistent;
};

/// Evaluates f(bac(lambda u)) at d nonzero points and solves for the
/// components. Throws PreconditionFailed unless a^2 = bc = 0 over a field,
/// RingTooSmall when the field has at most d nonzero elements.
VandermondeResult vandermonde_extract(const UnivariatePoly& f, const AlgebraElement& a, const AlgebraElement& b,
                                      const AlgebraElement& c, const AlgebraElement& u);

enum class C2Outcome { LargeFieldHolds, LargeFieldFails, NilpotentHolds, NilpotentFails, NeitherCaseApplies };
std::string to_string(C2Outcome outcome);

struct C2PairResult {
  C2Outcome outcome;
  std::optional<std::size_t> index;  // nilpotency index of ab
};

/// Classifies one square-zero pair against (ab)^(2d) = 0.
C2PairResult corollary_c2_pair(const AlgebraElement& a, const AlgebraElement& b, long long d);

struct C2Report {
  Verdict verdict;
  long long d;
  long long bound;  // 2d
  bool large_field;
  std::uint64_t pairs;
  std::optional<std::size_t> max_index;
  std::uint64_t neither_case;
  std::optional<std::pair<AlgebraElement, AlgebraElement>> neither_example;
};

/// Quantifies over square-zero pairs (a, b).
C2Report corollary_c2_check(const Algebra& algebra, long long d, const CheckMode& mode);

}  // namespace lpi
