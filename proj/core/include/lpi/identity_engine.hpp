#pragma once

// Quantified identity checks over concrete algebras, exhaustive or seeded-random.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "lpi/algebras.hpp"
#include "lpi/words.hpp"

namespace lpi {

inline constexpr std::uint64_t kDefaultBudget = 100'000'000;
inline constexpr std::size_t kMaxStandardDegree = 8;

struct CheckMode {
  enum class Kind { Exhaustive, Random };

  Kind kind = Kind::Random;
  std::uint64_t trials = 1000;
  std::uint64_t seed = 0;
  /// Maximum number of evaluations.
  std::uint64_t budget = kDefaultBudget;
  std::size_t jobs = 1;
  SamplingOptions sampling{};

  static CheckMode exhaustive(std::uint64_t budget = kDefaultBudget);
  static CheckMode random(std::uint64_t trials, std::uint64_t seed = 0);

  bool is_exhaustive() const noexcept { return kind == Kind::Exhaustive; }
  /// Throws InvalidArgument unless trials >= 1 and budget >= trials.
  void validate() const;
};

enum class VerdictStatus { Holds, HoldsProbably, Fails };
std::string to_string(VerdictStatus status);

struct NamedElement {
  std::string name;
  AlgebraElement value;
};

struct Verdict {
  VerdictStatus status = VerdictStatus::Holds;
  bool exhaustive = false;
  std::uint64_t evaluations = 0;
  std::uint64_t seed = 0;
  std::uint64_t trials = 0;
  /// Exhaustive: position in iteration order. Random: trial number.
  std::optional<std::uint64_t> witness_index;
  std::vector<NamedElement> witness;
  /// The nonzero value observed at the witness.
  std::optional<AlgebraElement> value;

  bool holds() const noexcept { return status != VerdictStatus::Fails; }
};

/// One line: status, counts, seed and any witness.
std::string describe(const Verdict& verdict);

/// Generic quantified check. Exhaustive iteration runs over the product of the
/// tuple pools (first pool slowest); random mode draws one tuple per trial from
/// an RNG seeded by (seed, trial).
struct Quantifier {
  using Tuple = std::vector<AlgebraElement>;
  using Pool = std::vector<Tuple>;

  std::vector<std::string> names;
  std::function<std::vector<std::shared_ptr<const Pool>>()> pools;
  std::function<Tuple(Rng&)> sample;
  /// Empty when the tuple passes, otherwise the offending value.
  std::function<std::optional<AlgebraElement>(std::span<const AlgebraElement>)> test;
};

Verdict run_quantifier(const Quantifier& q, const CheckMode& mode);

/// Pool of 1-tuples.
std::shared_ptr<const Quantifier::Pool> singleton_pool(const std::vector<AlgebraElement>& elements);
/// RNG for a given trial; identical across job counts.
Rng trial_rng(std::uint64_t seed, std::uint64_t trial);

/// P vanishes on all unit tuples.
Verdict check_lpi(const Algebra& algebra, const LaurentPolynomial& p, const CheckMode& mode);

/// P vanishes on all element tuples, or on tuples from the right ideal generated
/// by `ideal_generators`. Throws NegativeExponent.
Verdict check_pi(const Algebra& algebra, const LaurentPolynomial& p, const CheckMode& mode,
                 const std::optional<std::vector<AlgebraElement>>& ideal_generators = std::nullopt);

/// Alternating sum over Sym_n. Throws DegreeTooLarge above max_degree.
LaurentPolynomial standard_polynomial(std::size_t n, const Ring& ring, std::size_t max_degree = kMaxStandardDegree);
Verdict check_standard(const Algebra& algebra, std::size_t n, const CheckMode& mode,
                       std::size_t max_degree = kMaxStandardDegree);

/// w = 1 on all unit tuples.
Verdict check_group_identity(const Algebra& algebra, const GroupWord& w, const CheckMode& mode);

/// One term a_0 x_{order[0]} a_1 ... x_{order[n-1]} a_n of a multilinear
/// generalized polynomial. `order` lists 1-based variable indices.
struct GpiTerm {
  std::vector<std::size_t> order;
  std::vector<AlgebraElement> coefficients;
};

class GeneralizedPolynomial {
 public:
  GeneralizedPolynomial(Algebra algebra, std::size_t n);

  /// Throws InvalidArgument unless `order` is a permutation of 1..n and there
  /// are n + 1 coefficients from the algebra.
  void add_term(GpiTerm term);

  const Algebra& algebra() const noexcept { return algebra_; }
  std::size_t degree() const noexcept { return n_; }
  const std::vector<GpiTerm>& terms() const noexcept { return terms_; }
  /// Distinct variable orders in first-appearance order.
  std::vector<std::vector<std::size_t>> orders() const;
  /// Terms with the given order only.
  GeneralizedPolynomial component(const std::vector<std::size_t>& order) const;

  AlgebraElement evaluate(std::span<const AlgebraElement> values) const;

 private:
  Algebra algebra_;
  std::size_t n_;
  std::vector<GpiTerm> terms_;
};

Verdict check_gpi(const GeneralizedPolynomial& g, const CheckMode& mode);

struct NondegeneracyReport {
  bool nondegenerate;
  std::vector<std::pair<std::vector<std::size_t>, Verdict>> components;
};

NondegeneracyReport nondegeneracy(const GeneralizedPolynomial& g, const CheckMode& mode);
inline bool is_nondegenerate(const GeneralizedPolynomial& g, const CheckMode& mode) {
  return nondegeneracy(g, mode).nondegenerate;
}

}  // namespace lpi
