#pragma once

// Reduced words in free groups and noncommutative Laurent polynomials (finite
// linear combinations of words).

#include <compare>
#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lpi/algebras.hpp"
#include "lpi/scalars.hpp"

namespace lpi {

struct Syllable {
  std::size_t variable;  // 1-based: x1, x2, ...
  long long exponent;    // nonzero in a reduced word

  friend bool operator==(const Syllable&, const Syllable&) = default;
  friend auto operator<=>(const Syllable&, const Syllable&) = default;
};

class GroupWord {
 public:
  GroupWord() = default;
  static GroupWord generator(std::size_t variable, long long exponent = 1);
  /// Freely reduces the input.
  static GroupWord from_syllables(const std::vector<Syllable>& syllables);

  const std::vector<Syllable>& syllables() const noexcept { return syllables_; }
  bool is_identity() const noexcept { return syllables_.empty(); }
  /// Sum of |exponent| over syllables.
  std::size_t length() const noexcept;
  std::size_t max_variable() const noexcept;

  GroupWord inverse() const;
  friend GroupWord operator*(const GroupWord& u, const GroupWord& v);

  long long exp_sum(std::size_t variable) const noexcept;
  long long total_exp_sum() const noexcept;

  /// `x1^2*x2^-1`; the identity prints as `1`.
  std::string to_string() const;

  friend bool operator==(const GroupWord&, const GroupWord&) = default;
  /// Canonical order: by length, then lexicographically by (variable, exponent).
  friend std::strong_ordering operator<=>(const GroupWord& u, const GroupWord& v);

 private:
  std::vector<Syllable> syllables_;
};

class LaurentPolynomial {
 public:
  explicit LaurentPolynomial(const Ring& ring) : ring_(ring) {}
  static LaurentPolynomial constant(const Scalar& c);
  static LaurentPolynomial monomial(const Scalar& c, const GroupWord& w);

  const Ring& ring() const noexcept { return ring_; }
  /// Nonzero coefficients in canonical word order.
  const std::map<GroupWord, Scalar>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  Scalar coefficient(const GroupWord& w) const;
  /// Coefficient of the empty word.
  Scalar constant_term() const { return coefficient(GroupWord{}); }
  std::size_t max_variable() const noexcept;
  bool has_negative_exponent() const noexcept;

  void add_term(const GroupWord& w, const Scalar& c);

  LaurentPolynomial operator-() const;
  friend LaurentPolynomial operator+(const LaurentPolynomial& p, const LaurentPolynomial& q);
  friend LaurentPolynomial operator-(const LaurentPolynomial& p, const LaurentPolynomial& q);
  friend LaurentPolynomial operator*(const LaurentPolynomial& p, const LaurentPolynomial& q);
  friend LaurentPolynomial operator*(const Scalar& c, const LaurentPolynomial& p);
  friend bool operator==(const LaurentPolynomial&, const LaurentPolynomial&) = default;

  /// Output accepted by parse_poly; the zero polynomial prints as `0`.
  std::string to_string() const;

 private:
  Ring ring_;
  std::map<GroupWord, Scalar> terms_;
};

/// Grammar:
///   poly   := term (('+' | '-') term)*
///   term   := [scalar '*'] factor ('*' factor)* | scalar
///   factor := 'x' index ('^' signed-integer)?
/// Throws SyntaxError (with position) or ZeroPolynomial.
LaurentPolynomial parse_poly(std::string_view text, const Ring& ring);

/// Replaces x_variable by x_variable^k.
LaurentPolynomial substitute_power(const LaurentPolynomial& p, std::size_t variable, long long k);

/// Replaces each x_i by x^-i y x^i, with x = x1 and y = x2 in the output.
LaurentPolynomial reduce_to_two_variables(const LaurentPolynomial& p);

struct WordDiagnosis {
  GroupWord word;
  Scalar coefficient;
  std::map<std::size_t, long long> exp_sums;  // over the variables occurring in the polynomial
  long long total_exp_sum;
  bool constant;
  /// Nonconstant with zero exponent sum in every variable.
  bool offending;
};

struct AdmissibilityReport {
  bool admissible;
  std::vector<WordDiagnosis> words;

  std::vector<GroupWord> offenders() const;
};

AdmissibilityReport diagnose_admissibility(const LaurentPolynomial& p);
inline bool is_admissible(const LaurentPolynomial& p) { return diagnose_admissibility(p).admissible; }

/// Precompiled evaluation of a polynomial in one algebra. values[v - 1] is the
/// element substituted for x_v.
class Evaluator {
 public:
  Evaluator(const LaurentPolynomial& p, const Algebra& algebra);

  /// Number of variable slots (the largest variable index).
  std::size_t arity() const noexcept { return arity_; }
  /// Throws NotAUnit when a variable with a negative exponent gets a non-unit.
  AlgebraElement operator()(std::span<const AlgebraElement> values) const;

 private:
  struct Term {
    Scalar coefficient;
    GroupWord word;
  };
  Algebra algebra_;
  std::vector<Term> terms_;
  std::vector<bool> needs_inverse_;
  std::size_t arity_;
};

using Assignment = std::map<std::size_t, AlgebraElement>;

AlgebraElement evaluate(const LaurentPolynomial& p, const Assignment& assignment);
AlgebraElement evaluate(const GroupWord& w, const Assignment& assignment);

}  // namespace lpi
