#pragma once

// Concrete finite-dimensional algebras: M_n(K), upper-triangular T_n(K) and
// group algebras K[G] of finite groups.

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "lpi/groups.hpp"
#include "lpi/linalg.hpp"
#include "lpi/scalars.hpp"

namespace lpi {

enum class AlgebraKind { Matrix, Triangular, GroupAlgebra };

inline constexpr std::uint64_t kDefaultEnumerationCap = std::uint64_t{1} << 20;

using Rng = std::mt19937_64;

class AlgebraElement;

/// Shared, immutable algebra descriptor. Copies are cheap handles.
class Algebra {
 public:
  static Algebra matrix(std::size_t n, const Ring& ring);
  static Algebra triangular(std::size_t n, const Ring& ring);
  static Algebra group_algebra(FiniteGroup group, const Ring& ring, std::string group_spec = "");
  /// `matrix:<n>:<ring>`, `tri:<n>:<ring>` or `grpalg:<groupspec>:<ring>`.
  static Algebra parse(std::string_view spec, std::size_t max_group_order = kDefaultMaxGroupOrder);

  AlgebraKind kind() const noexcept;
  /// Matrix size n, or |G| for group algebras.
  std::size_t size() const noexcept;
  const Ring& ring() const noexcept;
  const FiniteGroup& group() const;
  /// Dimension over the scalar ring.
  std::size_t dimension() const noexcept;
  /// Number of stored scalars per element (n*n for matrix kinds).
  std::size_t storage_size() const noexcept;
  /// |K|^dimension when the ring is finite and the count fits in 64 bits.
  std::optional<std::uint64_t> cardinality() const;
  std::string to_string() const;

  AlgebraElement zero() const;
  AlgebraElement one() const;
  AlgebraElement scalar(const Scalar& s) const;
  /// Matrix unit e_ij with 1-based indices, as in e_12.
  AlgebraElement matrix_unit(std::size_t i, std::size_t j) const;
  AlgebraElement group_element(std::size_t g) const;
  /// Coordinates with respect to basis(), of length dimension().
  AlgebraElement from_coordinates(const std::vector<Scalar>& coords) const;
  /// Full storage (n*n row-major, or |G|); triangular inputs must vanish below the diagonal.
  AlgebraElement from_storage(std::vector<Scalar> data) const;
  std::vector<AlgebraElement> basis() const;

  friend bool operator==(const Algebra& x, const Algebra& y);
  friend bool operator!=(const Algebra& x, const Algebra& y) { return !(x == y); }

 private:
  struct Descriptor;
  explicit Algebra(std::shared_ptr<const Descriptor> d) : d_(std::move(d)) {}
  friend class AlgebraElement;
  friend std::vector<Scalar> coordinates(const AlgebraElement& x);

  std::shared_ptr<const Descriptor> d_;
};

class AlgebraElement {
 public:
  const Algebra& algebra() const noexcept { return algebra_; }
  const std::vector<Scalar>& storage() const noexcept { return data_; }
  /// 0-based matrix entry.
  const Scalar& entry(std::size_t row, std::size_t col) const;
  /// Coefficient of group element g.
  const Scalar& coefficient(std::size_t g) const;

  bool is_zero() const noexcept;
  bool is_one() const;

  AlgebraElement operator-() const;
  friend AlgebraElement operator+(const AlgebraElement& x, const AlgebraElement& y);
  friend AlgebraElement operator-(const AlgebraElement& x, const AlgebraElement& y);
  friend AlgebraElement operator*(const AlgebraElement& x, const AlgebraElement& y);
  friend AlgebraElement operator*(const Scalar& s, const AlgebraElement& x);
  AlgebraElement& operator+=(const AlgebraElement& y) { return *this = *this + y; }
  AlgebraElement& operator*=(const AlgebraElement& y) { return *this = *this * y; }
  friend bool operator==(const AlgebraElement& x, const AlgebraElement& y);
  friend bool operator!=(const AlgebraElement& x, const AlgebraElement& y) { return !(x == y); }

  AlgebraElement pow(std::uint64_t exponent) const;

  /// `[[a,b],[c,d]]` for matrices, `[c0,c1,...]` (by element index) for group algebras.
  std::string to_string() const;
  /// Group algebras as `c*g + ...` with element names; matrices as to_string().
  std::string pretty() const;

 private:
  AlgebraElement(Algebra algebra, std::vector<Scalar> data) : algebra_(std::move(algebra)), data_(std::move(data)) {}
  friend class Algebra;

  Algebra algebra_;
  std::vector<Scalar> data_;
};

std::vector<Scalar> coordinates(const AlgebraElement& x);

/// Parses the to_string() form against `algebra`.
AlgebraElement parse_element(const Algebra& algebra, std::string_view text);

/// Matrix of y -> x*y on basis coordinates.
DenseMatrix left_multiplication_matrix(const AlgebraElement& x);

bool is_unit(const AlgebraElement& x);
std::optional<AlgebraElement> try_inverse(const AlgebraElement& x);
/// Throws NotAUnit.
AlgebraElement inverse(const AlgebraElement& x);
/// Integer power; negative exponents need a unit.
AlgebraElement power(const AlgebraElement& x, long long exponent);

/// Random access over every element of a finite algebra in a fixed order.
class ElementSpace {
 public:
  ElementSpace(Algebra algebra, std::uint64_t cap = kDefaultEnumerationCap);
  /// Subspace spanned by `basis` (linearly independent), enumerated by coefficient tuples.
  ElementSpace(Algebra algebra, std::vector<AlgebraElement> basis, std::uint64_t cap = kDefaultEnumerationCap);

  std::uint64_t size() const noexcept { return size_; }
  AlgebraElement at(std::uint64_t index) const;
  std::vector<AlgebraElement> materialize() const;

 private:
  Algebra algebra_;
  std::vector<AlgebraElement> basis_;
  std::uint64_t radix_;
  std::uint64_t size_;
};

std::vector<AlgebraElement> enumerate_elements(const Algebra& algebra, std::uint64_t cap = kDefaultEnumerationCap);
std::vector<AlgebraElement> enumerate_units(const Algebra& algebra, std::uint64_t cap = kDefaultEnumerationCap);

struct SamplingOptions {
  /// Numerator and denominator bound for rational entries.
  long height = 5;
  std::size_t unit_retries = 1000;
};

Scalar random_scalar(const Ring& ring, Rng& rng, const SamplingOptions& options = {});
AlgebraElement random_element(const Algebra& algebra, Rng& rng, const SamplingOptions& options = {});
AlgebraElement random_element(const Algebra& algebra, std::uint64_t seed, const SamplingOptions& options = {});
/// Rejection sampling; throws SamplingExhausted after options.unit_retries misses.
AlgebraElement random_unit(const Algebra& algebra, Rng& rng, const SamplingOptions& options = {});
AlgebraElement random_unit(const Algebra& algebra, std::uint64_t seed, const SamplingOptions& options = {});
/// A random x with x^2 = 0. Matrix kinds conjugate a random block
/// nilpotent by a random unit; group algebras use rejection and fall back
/// to zero when the retry budget runs out.
AlgebraElement random_square_zero(const Algebra& algebra, Rng& rng, const SamplingOptions& options = {});
/// A random pair (b, c) with b*c = 0; b is biased toward zero divisors.
std::pair<AlgebraElement, AlgebraElement> random_zero_product_pair(const Algebra& algebra, Rng& rng,
                                                                   const SamplingOptions& options = {});
AlgebraElement random_in_span(const Algebra& algebra, const std::vector<AlgebraElement>& basis, Rng& rng,
                              const SamplingOptions& options = {});

/// Least m <= bound with x^m = 0 (bound = n for matrix kinds, |G| for group algebras).
std::optional<std::size_t> nilpotency_index(const AlgebraElement& x);
inline bool is_nilpotent(const AlgebraElement& x) { return nilpotency_index(x).has_value(); }
bool is_idempotent(const AlgebraElement& x);

/// Every x with x^2 = 0, zero included.
std::vector<AlgebraElement> square_zero_elements(const Algebra& algebra, std::uint64_t cap = kDefaultEnumerationCap);
/// Every (b, c) with b*c = 0 and b, c nonzero.
std::vector<std::pair<AlgebraElement, AlgebraElement>> zero_divisor_pairs(const Algebra& algebra,
                                                                          std::uint64_t cap = kDefaultEnumerationCap);
/// Every (b, c) with b*c = 0, zeros included.
std::vector<std::pair<AlgebraElement, AlgebraElement>> zero_product_pairs(const Algebra& algebra,
                                                                          std::uint64_t cap = kDefaultEnumerationCap);
/// Basis of {c : b*c = 0}.
std::vector<AlgebraElement> right_annihilator_basis(const AlgebraElement& b);
/// Basis of the right ideal sum_i g_i * A.
std::vector<AlgebraElement> right_ideal_basis(const std::vector<AlgebraElement>& generators);

/// n^-1 (1 + g + ... + g^(n-1)) for g of order n. Throws OrderNotInvertible.
AlgebraElement averaging_idempotent(const Algebra& group_algebra, std::size_t g);
/// Commutes with every element of basis() (matrix units / group elements).
bool is_central(const AlgebraElement& x);
/// All idempotents of a finite algebra (exhaustive).
std::vector<AlgebraElement> idempotents(const Algebra& algebra, std::uint64_t cap = kDefaultEnumerationCap);

struct SemiprimeVerdict {
  bool semiprime;
  std::string reason;
};

SemiprimeVerdict is_semiprime_group_algebra(const Algebra& group_algebra);

}  // namespace lpi
