#include "lpi/scalars.hpp"

#include <cctype>

#include "lpi/error.hpp"

namespace lpi {

namespace {

constexpr std::uint64_t kMaxModulus = (1ULL << 31);

std::int64_t reduce(const mpz_class& v, std::uint64_t p) {
  mpz_class r = v % mpz_class(static_cast<unsigned long>(p));
  if (r < 0) r += static_cast<unsigned long>(p);
  return static_cast<std::int64_t>(r.get_ui());
}

std::int64_t reduce(long long v, std::uint64_t p) {
  const auto m = static_cast<long long>(p);
  long long r = v % m;
  if (r < 0) r += m;
  return r;
}

std::int64_t mod_inverse(std::int64_t a, std::int64_t p) {
  std::int64_t t = 0, new_t = 1, r = p, new_r = a;
  while (new_r != 0) {
    const std::int64_t q = r / new_r;
    t -= q * new_t;
    std::swap(t, new_t);
    r -= q * new_r;
    std::swap(r, new_r);
  }
  if (t < 0) t += p;
  return t;
}

void require_same(const Scalar& x, const Scalar& y) {
  if (!(x.ring() == y.ring()))
    throw Error(ErrorKind::RingMismatch,
                "operands live in " + x.ring().to_string() + " and " + y.ring().to_string());
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

Ring Ring::prime_field(std::uint64_t p) {
  if (!is_prime(p))
    throw Error(ErrorKind::InvalidArgument, "GF(p) needs a prime modulus, got " + std::to_string(p));
  if (p >= kMaxModulus)
    throw Error(ErrorKind::InvalidArgument, "prime modulus must be below 2^31");
  return Ring(RingKind::PrimeField, p);
}

Ring Ring::parse(std::string_view text) {
  if (text == "q" || text == "Q") return rationals();
  if (text == "z" || text == "Z") return integers();
  if (text.size() > 2 && (text.substr(0, 2) == "gf" || text.substr(0, 2) == "GF")) {
    const auto digits = text.substr(2);
    if (all_digits(digits) && digits.size() < 11) return prime_field(std::stoull(std::string(digits)));
  }
  throw Error(ErrorKind::SpecSyntaxError, "unknown ring '" + std::string(text) + "' (expected q, z or gf<p>)");
}

std::string Ring::to_string() const {
  switch (kind_) {
    case RingKind::Rationals: return "q";
    case RingKind::Integers: return "z";
    case RingKind::PrimeField: return "gf" + std::to_string(p_);
  }
  return "?";
}

Scalar::Scalar(const Ring& ring, long long value) : ring_(ring), value_(std::int64_t{0}) {
  switch (ring.kind()) {
    case RingKind::PrimeField: value_ = reduce(value, ring.modulus()); break;
    case RingKind::Integers: value_ = mpz_class(static_cast<long>(value)); break;
    case RingKind::Rationals: value_ = mpq_class(static_cast<long>(value)); break;
  }
}

Scalar::Scalar(const Ring& ring, const mpz_class& value) : ring_(ring), value_(std::int64_t{0}) {
  switch (ring.kind()) {
    case RingKind::PrimeField: value_ = reduce(value, ring.modulus()); break;
    case RingKind::Integers: value_ = value; break;
    case RingKind::Rationals: value_ = mpq_class(value); break;
  }
}

Scalar::Scalar(const Ring& ring, const mpq_class& value) : ring_(ring), value_(std::int64_t{0}) {
  mpq_class v = value;
  v.canonicalize();
  switch (ring.kind()) {
    case RingKind::Rationals: value_ = v; break;
    case RingKind::Integers:
      if (v.get_den() != 1)
        throw Error(ErrorKind::NotInvertible, v.get_str() + " is not an integer");
      value_ = mpz_class(v.get_num());
      break;
    case RingKind::PrimeField: {
      const auto p = static_cast<std::int64_t>(ring.modulus());
      const std::int64_t den = reduce(v.get_den(), ring.modulus());
      if (den == 0)
        throw Error(ErrorKind::NotInvertible,
                    "denominator of " + v.get_str() + " vanishes in " + ring.to_string());
      const std::int64_t num = reduce(v.get_num(), ring.modulus());
      value_ = (num * mod_inverse(den, p)) % p;
      break;
    }
  }
}

Scalar Scalar::parse(std::string_view text, const Ring& ring) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && body.front() == '-') {
    negative = true;
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  const auto num_text = body.substr(0, slash);
  if (!all_digits(num_text))
    throw Error(ErrorKind::SyntaxError, "malformed scalar '" + std::string(text) + "'");
  mpz_class num{std::string(num_text)};
  if (negative) num = -num;
  if (slash == std::string_view::npos) return Scalar(ring, num);
  const auto den_text = body.substr(slash + 1);
  if (!all_digits(den_text))
    throw Error(ErrorKind::SyntaxError, "malformed scalar '" + std::string(text) + "'");
  mpz_class den{std::string(den_text)};
  if (den == 0) throw Error(ErrorKind::NotInvertible, "zero denominator in '" + std::string(text) + "'");
  return Scalar(ring, mpq_class(num, den));
}

bool Scalar::is_zero() const noexcept {
  switch (ring_.kind()) {
    case RingKind::PrimeField: return std::get<std::int64_t>(value_) == 0;
    case RingKind::Integers: return std::get<mpz_class>(value_) == 0;
    case RingKind::Rationals: return std::get<mpq_class>(value_) == 0;
  }
  return false;
}

bool Scalar::is_one() const noexcept {
  switch (ring_.kind()) {
    case RingKind::PrimeField: return std::get<std::int64_t>(value_) == 1;
    case RingKind::Integers: return std::get<mpz_class>(value_) == 1;
    case RingKind::Rationals: return std::get<mpq_class>(value_) == 1;
  }
  return false;
}

bool Scalar::is_negative() const noexcept {
  switch (ring_.kind()) {
    case RingKind::PrimeField: return false;
    case RingKind::Integers: return std::get<mpz_class>(value_) < 0;
    case RingKind::Rationals: return std::get<mpq_class>(value_) < 0;
  }
  return false;
}

Scalar Scalar::operator-() const {
  Scalar out = *this;
  switch (ring_.kind()) {
    case RingKind::PrimeField: {
      const auto v = std::get<std::int64_t>(value_);
      out.value_ = v == 0 ? 0 : static_cast<std::int64_t>(ring_.modulus()) - v;
      break;
    }
    case RingKind::Integers: out.value_ = mpz_class(-std::get<mpz_class>(value_)); break;
    case RingKind::Rationals: out.value_ = mpq_class(-std::get<mpq_class>(value_)); break;
  }
  return out;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw Error(ErrorKind::NotInvertible, "zero has no inverse in " + ring_.to_string());
  Scalar out = *this;
  switch (ring_.kind()) {
    case RingKind::PrimeField:
      out.value_ = mod_inverse(std::get<std::int64_t>(value_), static_cast<std::int64_t>(ring_.modulus()));
      break;
    case RingKind::Integers: {
      const auto& v = std::get<mpz_class>(value_);
      if (v != 1 && v != -1)
        throw Error(ErrorKind::NotInvertible, v.get_str() + " is not a unit of z");
      break;
    }
    case RingKind::Rationals: {
      mpq_class inv = 1 / std::get<mpq_class>(value_);
      inv.canonicalize();
      out.value_ = inv;
      break;
    }
  }
  return out;
}

Scalar Scalar::pow(long long exponent) const {
  Scalar base = exponent < 0 ? inverse() : *this;
  unsigned long long e = exponent < 0 ? -static_cast<unsigned long long>(exponent) : exponent;
  Scalar result = one(ring_);
  while (e != 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e != 0) base *= base;
  }
  return result;
}

Scalar operator+(const Scalar& x, const Scalar& y) {
  require_same(x, y);
  Scalar out = x;
  switch (x.ring_.kind()) {
    case RingKind::PrimeField: {
      std::int64_t s = std::get<std::int64_t>(x.value_) + std::get<std::int64_t>(y.value_);
      const auto p = static_cast<std::int64_t>(x.ring_.modulus());
      if (s >= p) s -= p;
      out.value_ = s;
      break;
    }
    case RingKind::Integers:
      out.value_ = mpz_class(std::get<mpz_class>(x.value_) + std::get<mpz_class>(y.value_));
      break;
    case RingKind::Rationals:
      out.value_ = mpq_class(std::get<mpq_class>(x.value_) + std::get<mpq_class>(y.value_));
      break;
  }
  return out;
}

Scalar operator-(const Scalar& x, const Scalar& y) { return x + (-y); }

Scalar operator*(const Scalar& x, const Scalar& y) {
  require_same(x, y);
  Scalar out = x;
  switch (x.ring_.kind()) {
    case RingKind::PrimeField:
      out.value_ = (std::get<std::int64_t>(x.value_) * std::get<std::int64_t>(y.value_)) %
                   static_cast<std::int64_t>(x.ring_.modulus());
      break;
    case RingKind::Integers:
      out.value_ = mpz_class(std::get<mpz_class>(x.value_) * std::get<mpz_class>(y.value_));
      break;
    case RingKind::Rationals:
      out.value_ = mpq_class(std::get<mpq_class>(x.value_) * std::get<mpq_class>(y.value_));
      break;
  }
  return out;
}

bool operator==(const Scalar& x, const Scalar& y) {
  return x.ring_ == y.ring_ && x.value_ == y.value_;
}

Scalar Scalar::embed_to_rationals() const {
  switch (ring_.kind()) {
    case RingKind::Rationals: return *this;
    case RingKind::Integers: return Scalar(Ring::rationals(), std::get<mpz_class>(value_));
    case RingKind::PrimeField: break;
  }
  throw Error(ErrorKind::RingMismatch, "prime-field values do not embed in q");
}

Scalar Scalar::coerce_to(const Ring& target) const {
  if (target == ring_) return *this;
  if (ring_.kind() == RingKind::Integers) return Scalar(target, std::get<mpz_class>(value_));
  throw Error(ErrorKind::RingMismatch, "no embedding from " + ring_.to_string() + " into " + target.to_string());
}

std::int64_t Scalar::residue() const {
  if (ring_.kind() != RingKind::PrimeField)
    throw Error(ErrorKind::RingMismatch, "residue() needs a prime field");
  return std::get<std::int64_t>(value_);
}

mpq_class Scalar::rational() const {
  switch (ring_.kind()) {
    case RingKind::Rationals: return std::get<mpq_class>(value_);
    case RingKind::Integers: return mpq_class(std::get<mpz_class>(value_));
    case RingKind::PrimeField: return mpq_class(static_cast<long>(std::get<std::int64_t>(value_)));
  }
  return {};
}

std::string Scalar::to_string() const {
  switch (ring_.kind()) {
    case RingKind::PrimeField: return std::to_string(std::get<std::int64_t>(value_));
    case RingKind::Integers: return std::get<mpz_class>(value_).get_str();
    case RingKind::Rationals: return std::get<mpq_class>(value_).get_str();
  }
  return "?";
}

std::vector<Scalar> distinct_scalars(const Ring& ring, std::size_t n) {
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "distinct_scalars needs n >= 1");
  if (ring.is_finite() && ring.modulus() - 1 < n)
    throw Error(ErrorKind::RingTooSmall, ring.to_string() + " has only " + std::to_string(ring.modulus() - 1) +
                                             " nonzero elements, " + std::to_string(n) + " requested");
  std::vector<Scalar> out;
  out.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) out.emplace_back(ring, static_cast<long long>(i));
  return out;
}

}  // namespace lpi
