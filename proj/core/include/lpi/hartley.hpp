#pragma once

// Group-algebra analysis of finite groups, and the S_2n * (x1...x2n)^-1 example
// of a Laurent identity whose words all have zero exponent sums.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lpi/algebras.hpp"
#include "lpi/groups.hpp"
#include "lpi/identity_engine.hpp"
#include "lpi/words.hpp"

namespace lpi {

inline constexpr std::uint64_t kFullIdempotentScanLimit = std::uint64_t{1} << 12;

struct AveragingCheck {
  std::size_t element;
  std::string name;
  std::size_t order;
  /// Empty when the order is not invertible in the field.
  std::optional<AlgebraElement> idempotent;
  bool is_idempotent = false;
  bool central = false;
};

struct IdempotentScan {
  bool performed = false;
  std::string skipped_reason;
  std::size_t idempotents = 0;
  std::size_t central = 0;
  std::optional<AlgebraElement> noncentral_example;
};

struct HartleyReport {
  std::string group_spec;
  std::size_t group_order;
  Ring field;
  SemiprimeVerdict semiprime;
  std::size_t fc_size;
  std::size_t fc_derived_size;
  std::vector<AveragingCheck> averaging;
  IdempotentScan full_scan;
  GroupClassification classification;
  std::optional<ElementSet> index2_abelian;
  Verdict s4;
  /// S_2 on a commutative group algebra, exhaustive when small enough.
  std::optional<Verdict> s2;
  std::optional<Ring> s2_field;
  /// G is Dedekind and K[G] semiprime, yet an idempotent found is not central.
  bool idempotent_violation = false;
  /// S_4 failed although G is abelian or Hamiltonian.
  bool s4_violation = false;
  std::vector<std::string> notes;

  std::size_t averaging_defined() const;
  bool all_averaging_central() const;
};

/// Throws InvalidArgument unless the field is Q or GF(p); TooLarge from the S_4 check.
HartleyReport analyze(const FiniteGroup& group, const std::string& group_spec, const Ring& field,
                      const CheckMode& mode);

std::string render_text(const HartleyReport& report);

struct GroupIdentityProbe {
  std::string label;
  GroupWord word;
  Verdict verdict;
};

struct CounterexampleOptions {
  /// Field for the unit-group scan of candidate group identities.
  Ring gi_field = Ring::prime_field(5);
  long long max_power = 10;
  std::size_t engel_depth = 3;
};

struct CounterexampleReport {
  std::size_t n;
  Ring field;
  LaurentPolynomial p;
  AdmissibilityReport admissibility;
  /// Words (constant included) with zero exponent sum in every variable.
  std::size_t zero_sum_words;
  Verdict lpi;
  /// Error raised by normalize_exponents.
  std::string normalize_error_kind;
  std::string normalize_error;
  AlgebraElement a;   // e21
  AlgebraElement b;   // e12
  AlgebraElement ba;  // e11
  bool ba_idempotent;
  bool ba_nilpotent;
  Ring gi_field;
  std::vector<GroupIdentityProbe> gi_scan;
};

/// S_2n * (x1...x2n)^-1.
LaurentPolynomial standard_times_inverse(std::size_t n, const Ring& ring);

/// Throws DegreeTooLarge when 2n exceeds the standard-polynomial limit.
CounterexampleReport counterexample_demo(std::size_t n, const Ring& field, const CheckMode& mode,
                                         const CounterexampleOptions& options = {});

std::string render_text(const CounterexampleReport& report);

}  // namespace lpi
