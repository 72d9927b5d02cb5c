#pragma once

// Exact coefficient rings: Q, Z and prime fields GF(p).

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <gmpxx.h>

namespace lpi {

enum class RingKind { Rationals, PrimeField, Integers };

bool is_prime(std::uint64_t n) noexcept;

class Ring {
 public:
  static Ring rationals() { return Ring(RingKind::Rationals, 0); }
  static Ring integers() { return Ring(RingKind::Integers, 0); }
  /// Throws InvalidArgument unless p is a prime below 2^31.
  static Ring prime_field(std::uint64_t p);
  /// Accepts `q`, `z` and `gf<p>`.
  static Ring parse(std::string_view text);

  RingKind kind() const noexcept { return kind_; }
  std::uint64_t modulus() const noexcept { return p_; }
  std::uint64_t characteristic() const noexcept { return p_; }
  bool is_field() const noexcept { return kind_ != RingKind::Integers; }
  bool is_finite() const noexcept { return kind_ == RingKind::PrimeField; }
  std::string to_string() const;

  friend bool operator==(const Ring&, const Ring&) = default;

 private:
  Ring(RingKind kind, std::uint64_t p) : kind_(kind), p_(p) {}

  RingKind kind_;
  std::uint64_t p_;
};

/// An immutable element of a Ring. Rationals are kept in lowest terms with a
/// positive denominator; prime-field values are residues in [0, p).
class Scalar {
 public:
  Scalar(const Ring& ring, long long value);
  Scalar(const Ring& ring, const mpz_class& value);
  /// For Integers the denominator must be 1; for GF(p) it must be invertible.
  Scalar(const Ring& ring, const mpq_class& value);

  static Scalar zero(const Ring& ring) { return Scalar(ring, 0LL); }
  static Scalar one(const Ring& ring) { return Scalar(ring, 1LL); }
  /// Textual syntax `-?[0-9]+` or `a/b`; field elements are reduced mod p.
  static Scalar parse(std::string_view text, const Ring& ring);

  const Ring& ring() const noexcept { return ring_; }
  bool is_zero() const noexcept;
  bool is_one() const noexcept;
  /// Sign for printing; prime-field residues are never negative.
  bool is_negative() const noexcept;

  Scalar operator-() const;
  Scalar inverse() const;
  Scalar pow(long long exponent) const;

  friend Scalar operator+(const Scalar& x, const Scalar& y);
  friend Scalar operator-(const Scalar& x, const Scalar& y);
  friend Scalar operator*(const Scalar& x, const Scalar& y);
  friend Scalar operator/(const Scalar& x, const Scalar& y) { return x * y.inverse(); }
  Scalar& operator+=(const Scalar& y) { return *this = *this + y; }
  Scalar& operator-=(const Scalar& y) { return *this = *this - y; }
  Scalar& operator*=(const Scalar& y) { return *this = *this * y; }

  friend bool operator==(const Scalar& x, const Scalar& y);
  friend bool operator!=(const Scalar& x, const Scalar& y) { return !(x == y); }

  /// Z -> Q embedding; Q stays in Q. Prime-field values raise RingMismatch.
  Scalar embed_to_rationals() const;
  /// Ring homomorphism into `target`: identity, or Z into any ring.
  Scalar coerce_to(const Ring& target) const;

  std::int64_t residue() const;
  mpq_class rational() const;
  std::string to_string() const;

 private:
  Ring ring_;
  std::variant<std::int64_t, mpz_class, mpq_class> value_;
};

/// `n` pairwise-distinct nonzero scalars 1, 2, ..., n of `ring`.
std::vector<Scalar> distinct_scalars(const Ring& ring, std::size_t n);

}  // namespace lpi
