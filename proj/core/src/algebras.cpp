#include "lpi/algebras.hpp"

#include <algorithm>
#include <cctype>
#include <limits>

#include "lpi/error.hpp"

namespace lpi {

struct Algebra::Descriptor {
  AlgebraKind kind;
  std::size_t n;
  Ring ring;
  std::shared_ptr<const FiniteGroup> group;
  std::string group_spec;
  // Storage offsets of the basis coordinates.
  std::vector<std::size_t> free_positions;
};

namespace {

std::size_t parse_size(std::string_view text, std::string_view spec) {
  if (text.empty() || text.size() > 6 ||
      !std::all_of(text.begin(), text.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
    throw Error(ErrorKind::SpecSyntaxError, "malformed algebra spec '" + std::string(spec) + "'");
  const auto n = static_cast<std::size_t>(std::stoul(std::string(text)));
  if (n == 0) throw Error(ErrorKind::SpecSyntaxError, "matrix size must be positive in '" + std::string(spec) + "'");
  return n;
}

void require_same(const AlgebraElement& x, const AlgebraElement& y) {
  if (x.algebra() != y.algebra())
    throw Error(ErrorKind::DescriptorMismatch,
                "elements of " + x.algebra().to_string() + " and " + y.algebra().to_string() + " do not combine");
}

void require_field(const Algebra& algebra, const char* what) {
  if (!algebra.ring().is_field())
    throw Error(ErrorKind::NotInvertible, std::string(what) + " needs a field, got " + algebra.ring().to_string());
}

}  // namespace

Algebra Algebra::matrix(std::size_t n, const Ring& ring) {
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "matrix size must be positive");
  auto d = std::make_shared<Descriptor>(Descriptor{AlgebraKind::Matrix, n, ring, nullptr, "", {}});
  for (std::size_t k = 0; k < n * n; ++k) d->free_positions.push_back(k);
  return Algebra(std::move(d));
}

Algebra Algebra::triangular(std::size_t n, const Ring& ring) {
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "matrix size must be positive");
  auto d = std::make_shared<Descriptor>(Descriptor{AlgebraKind::Triangular, n, ring, nullptr, "", {}});
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) d->free_positions.push_back(i * n + j);
  return Algebra(std::move(d));
}

Algebra Algebra::group_algebra(FiniteGroup group, const Ring& ring, std::string group_spec) {
  const std::size_t n = group.order();
  if (group_spec.empty()) group_spec = "order" + std::to_string(n);
  auto d = std::make_shared<Descriptor>(Descriptor{AlgebraKind::GroupAlgebra, n, ring,
                                                   std::make_shared<const FiniteGroup>(std::move(group)),
                                                   std::move(group_spec), {}});
  for (std::size_t k = 0; k < n; ++k) d->free_positions.push_back(k);
  return Algebra(std::move(d));
}

Algebra Algebra::parse(std::string_view spec, std::size_t max_group_order) {
  const auto first = spec.find(':');
  const auto last = spec.rfind(':');
  if (first == std::string_view::npos || first == last)
    throw Error(ErrorKind::SpecSyntaxError, "algebra spec '" + std::string(spec) + "' needs the form kind:arg:ring");
  const auto kind = spec.substr(0, first);
  const auto arg = spec.substr(first + 1, last - first - 1);
  const Ring ring = Ring::parse(spec.substr(last + 1));
  if (kind == "matrix") return matrix(parse_size(arg, spec), ring);
  if (kind == "tri") return triangular(parse_size(arg, spec), ring);
  if (kind == "grpalg") return group_algebra(build_group(arg, max_group_order), ring, std::string(arg));
  throw Error(ErrorKind::SpecSyntaxError, "unknown algebra kind '" + std::string(kind) + "'");
}

AlgebraKind Algebra::kind() const noexcept { return d_->kind; }
std::size_t Algebra::size() const noexcept { return d_->n; }
const Ring& Algebra::ring() const noexcept { return d_->ring; }

const FiniteGroup& Algebra::group() const {
  if (!d_->group) throw Error(ErrorKind::InvalidArgument, to_string() + " is not a group algebra");
  return *d_->group;
}

std::size_t Algebra::dimension() const noexcept { return d_->free_positions.size(); }

std::size_t Algebra::storage_size() const noexcept {
  return d_->kind == AlgebraKind::GroupAlgebra ? d_->n : d_->n * d_->n;
}

std::optional<std::uint64_t> Algebra::cardinality() const {
  if (!ring().is_finite()) return std::nullopt;
  std::uint64_t count = 1;
  for (std::size_t k = 0; k < dimension(); ++k) {
    if (count > std::numeric_limits<std::uint64_t>::max() / ring().modulus()) return std::nullopt;
    count *= ring().modulus();
  }
  return count;
}

std::string Algebra::to_string() const {
  switch (d_->kind) {
    case AlgebraKind::Matrix: return "matrix:" + std::to_string(d_->n) + ":" + ring().to_string();
    case AlgebraKind::Triangular: return "tri:" + std::to_string(d_->n) + ":" + ring().to_string();
    case AlgebraKind::GroupAlgebra: return "grpalg:" + d_->group_spec + ":" + ring().to_string();
  }
  return "?";
}

bool operator==(const Algebra& x, const Algebra& y) {
  if (x.d_ == y.d_) return true;
  if (x.d_->kind != y.d_->kind || x.d_->n != y.d_->n || !(x.d_->ring == y.d_->ring)) return false;
  if (x.d_->kind != AlgebraKind::GroupAlgebra) return true;
  return *x.d_->group == *y.d_->group;
}

AlgebraElement Algebra::zero() const {
  return AlgebraElement(*this, std::vector<Scalar>(storage_size(), Scalar::zero(ring())));
}

AlgebraElement Algebra::one() const { return scalar(Scalar::one(ring())); }

AlgebraElement Algebra::scalar(const Scalar& s) const {
  AlgebraElement out = zero();
  const Scalar value = s.coerce_to(ring());
  if (kind() == AlgebraKind::GroupAlgebra) {
    out.data_[0] = value;
  } else {
    for (std::size_t i = 0; i < d_->n; ++i) out.data_[i * d_->n + i] = value;
  }
  return out;
}

AlgebraElement Algebra::matrix_unit(std::size_t i, std::size_t j) const {
  if (kind() == AlgebraKind::GroupAlgebra) throw Error(ErrorKind::InvalidArgument, "matrix units need a matrix algebra");
  if (i == 0 || j == 0 || i > d_->n || j > d_->n)
    throw Error(ErrorKind::InvalidArgument, "matrix unit e" + std::to_string(i) + std::to_string(j) + " out of range");
  if (kind() == AlgebraKind::Triangular && i > j)
    throw Error(ErrorKind::InvalidArgument, "e" + std::to_string(i) + std::to_string(j) + " is not upper triangular");
  AlgebraElement out = zero();
  out.data_[(i - 1) * d_->n + (j - 1)] = Scalar::one(ring());
  return out;
}

AlgebraElement Algebra::group_element(std::size_t g) const {
  if (g >= group().order()) throw Error(ErrorKind::InvalidArgument, "group element index out of range");
  AlgebraElement out = zero();
  out.data_[g] = Scalar::one(ring());
  return out;
}

AlgebraElement Algebra::from_coordinates(const std::vector<Scalar>& coords) const {
  if (coords.size() != dimension()) throw Error(ErrorKind::InvalidArgument, "coordinate vector has the wrong length");
  AlgebraElement out = zero();
  for (std::size_t k = 0; k < coords.size(); ++k) out.data_[d_->free_positions[k]] = coords[k].coerce_to(ring());
  return out;
}

AlgebraElement Algebra::from_storage(std::vector<Scalar> data) const {
  if (data.size() != storage_size()) throw Error(ErrorKind::InvalidArgument, "storage vector has the wrong length");
  for (auto& s : data) s = s.coerce_to(ring());
  if (kind() == AlgebraKind::Triangular)
    for (std::size_t i = 0; i < d_->n; ++i)
      for (std::size_t j = 0; j < i; ++j)
        if (!data[i * d_->n + j].is_zero())
          throw Error(ErrorKind::InvalidArgument, "triangular element has a nonzero entry below the diagonal");
  return AlgebraElement(*this, std::move(data));
}

std::vector<AlgebraElement> Algebra::basis() const {
  std::vector<AlgebraElement> out;
  out.reserve(dimension());
  for (std::size_t pos : d_->free_positions) {
    AlgebraElement e = zero();
    e.data_[pos] = Scalar::one(ring());
    out.push_back(std::move(e));
  }
  return out;
}

std::vector<Scalar> coordinates(const AlgebraElement& x) {
  std::vector<Scalar> out;
  out.reserve(x.algebra().dimension());
  for (std::size_t pos : x.algebra().d_->free_positions) out.push_back(x.storage()[pos]);
  return out;
}

const Scalar& AlgebraElement::entry(std::size_t row, std::size_t col) const {
  if (algebra_.kind() == AlgebraKind::GroupAlgebra) throw Error(ErrorKind::InvalidArgument, "entry() needs a matrix algebra");
  return data_.at(row * algebra_.size() + col);
}

const Scalar& AlgebraElement::coefficient(std::size_t g) const {
  if (algebra_.kind() != AlgebraKind::GroupAlgebra)
    throw Error(ErrorKind::InvalidArgument, "coefficient() needs a group algebra");
  return data_.at(g);
}

bool AlgebraElement::is_zero() const noexcept {
  return std::all_of(data_.begin(), data_.end(), [](const Scalar& s) { return s.is_zero(); });
}

bool AlgebraElement::is_one() const { return *this == algebra_.one(); }

AlgebraElement AlgebraElement::operator-() const {
  AlgebraElement out = *this;
  for (auto& s : out.data_) s = -s;
  return out;
}

AlgebraElement operator+(const AlgebraElement& x, const AlgebraElement& y) {
  require_same(x, y);
  AlgebraElement out = x;
  for (std::size_t k = 0; k < out.data_.size(); ++k) out.data_[k] += y.data_[k];
  return out;
}

AlgebraElement operator-(const AlgebraElement& x, const AlgebraElement& y) {
  require_same(x, y);
  AlgebraElement out = x;
  for (std::size_t k = 0; k < out.data_.size(); ++k) out.data_[k] -= y.data_[k];
  return out;
}

AlgebraElement operator*(const Scalar& s, const AlgebraElement& x) {
  const Scalar c = s.coerce_to(x.algebra().ring());
  AlgebraElement out = x;
  for (auto& v : out.data_) v = c * v;
  return out;
}

AlgebraElement operator*(const AlgebraElement& x, const AlgebraElement& y) {
  require_same(x, y);
  const Algebra& alg = x.algebra();
  const Ring& ring = alg.ring();
  const std::size_t n = alg.size();
  const bool group = alg.kind() == AlgebraKind::GroupAlgebra;

  if (ring.is_finite()) {
    // Residue fast path: products stay below 2^62 and at most n are summed
    // before reduction.
    const auto p = static_cast<std::int64_t>(ring.modulus());
    const std::size_t len = x.data_.size();
    std::vector<std::int64_t> a(len), b(len), c(len, 0);
    for (std::size_t k = 0; k < len; ++k) {
      a[k] = x.data_[k].residue();
      b[k] = y.data_[k].residue();
    }
    if (group) {
      const FiniteGroup& g = alg.group();
      for (std::size_t i = 0; i < n; ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < n; ++j) {
          if (b[j] == 0) continue;
          const std::size_t k = g.mul(i, j);
          c[k] = (c[k] + a[i] * b[j]) % p;
        }
      }
    } else {
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
          const std::int64_t aik = a[i * n + k];
          if (aik == 0) continue;
          for (std::size_t j = 0; j < n; ++j) c[i * n + j] = (c[i * n + j] + aik * b[k * n + j]) % p;
        }
    }
    std::vector<Scalar> data;
    data.reserve(len);
    for (std::size_t k = 0; k < len; ++k) data.emplace_back(ring, static_cast<long long>(c[k]));
    return AlgebraElement(alg, std::move(data));
  }

  AlgebraElement out = alg.zero();
  if (group) {
    const FiniteGroup& g = alg.group();
    for (std::size_t i = 0; i < n; ++i) {
      if (x.data_[i].is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (y.data_[j].is_zero()) continue;
        out.data_[g.mul(i, j)] += x.data_[i] * y.data_[j];
      }
    }
  } else {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k) {
        const Scalar& xik = x.data_[i * n + k];
        if (xik.is_zero()) continue;
        for (std::size_t j = 0; j < n; ++j) {
          const Scalar& ykj = y.data_[k * n + j];
          if (!ykj.is_zero()) out.data_[i * n + j] += xik * ykj;
        }
      }
  }
  return out;
}

bool operator==(const AlgebraElement& x, const AlgebraElement& y) {
  return x.algebra_ == y.algebra_ && x.data_ == y.data_;
}

AlgebraElement AlgebraElement::pow(std::uint64_t exponent) const {
  AlgebraElement result = algebra_.one();
  AlgebraElement base = *this;
  while (exponent != 0) {
    if (exponent & 1) result = result * base;
    exponent >>= 1;
    if (exponent != 0) base = base * base;
  }
  return result;
}

std::string AlgebraElement::to_string() const {
  std::string out = "[";
  if (algebra_.kind() == AlgebraKind::GroupAlgebra) {
    for (std::size_t k = 0; k < data_.size(); ++k) out += (k ? "," : "") + data_[k].to_string();
    return out + "]";
  }
  const std::size_t n = algebra_.size();
  for (std::size_t i = 0; i < n; ++i) {
    out += i ? ",[" : "[";
    for (std::size_t j = 0; j < n; ++j) out += (j ? "," : "") + data_[i * n + j].to_string();
    out += "]";
  }
  return out + "]";
}

std::string AlgebraElement::pretty() const {
  if (algebra_.kind() != AlgebraKind::GroupAlgebra) return to_string();
  std::string out;
  for (std::size_t g = 0; g < data_.size(); ++g) {
    if (data_[g].is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += data_[g].to_string() + "*" + algebra_.group().name(g);
  }
  return out.empty() ? "0" : out;
}

AlgebraElement parse_element(const Algebra& algebra, std::string_view text) {
  // Flatten the bracket structure into a list of scalar tokens.
  std::vector<std::string> tokens;
  std::string current;
  int depth = 0, max_depth = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    if (c == '[') {
      max_depth = std::max(max_depth, ++depth);
    } else if (c == ']' || c == ',') {
      if (!current.empty()) tokens.push_back(std::move(current));
      current.clear();
      if (c == ']' && --depth < 0) throw Error(ErrorKind::SyntaxError, "unbalanced ']'", i);
    } else {
      current += c;
    }
  }
  if (depth != 0) throw Error(ErrorKind::SyntaxError, "unbalanced '['", text.size());
  if (!current.empty()) tokens.push_back(std::move(current));
  const int expected_depth = algebra.kind() == AlgebraKind::GroupAlgebra ? 1 : 2;
  if (max_depth != expected_depth || tokens.size() != algebra.storage_size())
    throw Error(ErrorKind::SyntaxError, "element '" + std::string(text) + "' does not match " + algebra.to_string());
  std::vector<Scalar> data;
  for (const auto& t : tokens) data.push_back(Scalar::parse(t, algebra.ring()));
  return algebra.from_storage(std::move(data));
}

DenseMatrix left_multiplication_matrix(const AlgebraElement& x) {
  const Algebra& alg = x.algebra();
  const auto basis = alg.basis();
  DenseMatrix m(alg.ring(), alg.dimension(), alg.dimension());
  for (std::size_t col = 0; col < basis.size(); ++col) {
    const auto image = coordinates(x * basis[col]);
    for (std::size_t row = 0; row < image.size(); ++row) m.at(row, col) = image[row];
  }
  return m;
}

namespace {

DenseMatrix as_square_matrix(const AlgebraElement& x) {
  const std::size_t n = x.algebra().size();
  DenseMatrix m(x.algebra().ring(), n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m.at(i, j) = x.storage()[i * n + j];
  return m;
}

}  // namespace

bool is_unit(const AlgebraElement& x) {
  const Algebra& alg = x.algebra();
  require_field(alg, "unit test");
  if (alg.kind() == AlgebraKind::GroupAlgebra) return rank(left_multiplication_matrix(x)) == alg.dimension();
  return rank(as_square_matrix(x)) == alg.size();
}

std::optional<AlgebraElement> try_inverse(const AlgebraElement& x) {
  const Algebra& alg = x.algebra();
  require_field(alg, "inversion");
  if (alg.kind() == AlgebraKind::GroupAlgebra) {
    auto y = solve(left_multiplication_matrix(x), coordinates(alg.one()));
    if (!y) return std::nullopt;
    // A right inverse in a finite-dimensional algebra is two-sided.
    return alg.from_coordinates(*y);
  }
  auto inv = inverse(as_square_matrix(x));
  if (!inv) return std::nullopt;
  const std::size_t n = alg.size();
  std::vector<Scalar> data;
  data.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) data.push_back(inv->at(i, j));
  return alg.from_storage(std::move(data));
}

AlgebraElement inverse(const AlgebraElement& x) {
  auto inv = try_inverse(x);
  if (!inv) throw Error(ErrorKind::NotAUnit, x.to_string() + " is not a unit of " + x.algebra().to_string());
  return *inv;
}

AlgebraElement power(const AlgebraElement& x, long long exponent) {
  if (exponent >= 0) return x.pow(static_cast<std::uint64_t>(exponent));
  return inverse(x).pow(static_cast<std::uint64_t>(-exponent));
}

ElementSpace::ElementSpace(Algebra algebra, std::uint64_t cap)
    : ElementSpace(algebra, algebra.basis(), cap) {}

ElementSpace::ElementSpace(Algebra algebra, std::vector<AlgebraElement> basis, std::uint64_t cap)
    : algebra_(std::move(algebra)), basis_(std::move(basis)), radix_(0), size_(1) {
  if (!algebra_.ring().is_finite())
    throw Error(ErrorKind::TooLarge, "cannot enumerate " + algebra_.to_string() + ": scalar ring is infinite");
  radix_ = algebra_.ring().modulus();
  for (std::size_t k = 0; k < basis_.size(); ++k) {
    if (size_ > cap / radix_)
      throw Error(ErrorKind::TooLarge, "enumeration of " + algebra_.to_string() + " exceeds cap " + std::to_string(cap));
    size_ *= radix_;
  }
}

AlgebraElement ElementSpace::at(std::uint64_t index) const {
  // The first basis vector varies fastest.
  AlgebraElement out = algebra_.zero();
  const Ring& ring = algebra_.ring();
  for (std::size_t k = 0; k < basis_.size(); ++k) {
    const auto digit = static_cast<long long>(index % radix_);
    index /= radix_;
    if (digit != 0) out += Scalar(ring, digit) * basis_[k];
  }
  return out;
}

std::vector<AlgebraElement> ElementSpace::materialize() const {
  std::vector<AlgebraElement> out;
  out.reserve(size_);
  for (std::uint64_t i = 0; i < size_; ++i) out.push_back(at(i));
  return out;
}

std::vector<AlgebraElement> enumerate_elements(const Algebra& algebra, std::uint64_t cap) {
  return ElementSpace(algebra, cap).materialize();
}

std::vector<AlgebraElement> enumerate_units(const Algebra& algebra, std::uint64_t cap) {
  const ElementSpace space(algebra, cap);
  std::vector<AlgebraElement> out;
  for (std::uint64_t i = 0; i < space.size(); ++i) {
    AlgebraElement x = space.at(i);
    if (is_unit(x)) out.push_back(std::move(x));
  }
  return out;
}

Scalar random_scalar(const Ring& ring, Rng& rng, const SamplingOptions& options) {
  if (ring.is_finite()) {
    std::uniform_int_distribution<long long> dist(0, static_cast<long long>(ring.modulus()) - 1);
    return Scalar(ring, dist(rng));
  }
  std::uniform_int_distribution<long> num(-options.height, options.height);
  if (ring.kind() == RingKind::Integers) return Scalar(ring, static_cast<long long>(num(rng)));
  std::uniform_int_distribution<long> den(1, options.height);
  const long a = num(rng);
  const long b = den(rng);
  return Scalar(ring, mpq_class(a, static_cast<unsigned long>(b)));
}

AlgebraElement random_element(const Algebra& algebra, Rng& rng, const SamplingOptions& options) {
  std::vector<Scalar> coords;
  coords.reserve(algebra.dimension());
  for (std::size_t k = 0; k < algebra.dimension(); ++k) coords.push_back(random_scalar(algebra.ring(), rng, options));
  return algebra.from_coordinates(coords);
}

AlgebraElement random_element(const Algebra& algebra, std::uint64_t seed, const SamplingOptions& options) {
  Rng rng(seed);
  return random_element(algebra, rng, options);
}

AlgebraElement random_unit(const Algebra& algebra, Rng& rng, const SamplingOptions& options) {
  require_field(algebra, "unit sampling");
  for (std::size_t attempt = 0; attempt < options.unit_retries; ++attempt) {
    AlgebraElement x = random_element(algebra, rng, options);
    if (is_unit(x)) return x;
  }
  throw Error(ErrorKind::SamplingExhausted,
              "no unit of " + algebra.to_string() + " found in " + std::to_string(options.unit_retries) + " draws");
}

AlgebraElement random_unit(const Algebra& algebra, std::uint64_t seed, const SamplingOptions& options) {
  Rng rng(seed);
  return random_unit(algebra, rng, options);
}

AlgebraElement random_square_zero(const Algebra& algebra, Rng& rng, const SamplingOptions& options) {
  if (algebra.kind() == AlgebraKind::GroupAlgebra) {
    for (std::size_t attempt = 0; attempt < options.unit_retries; ++attempt) {
      AlgebraElement x = random_element(algebra, rng, options);
      if ((x * x).is_zero()) return x;
    }
    return algebra.zero();
  }
  const std::size_t n = algebra.size();
  if (n == 1) return algebra.zero();
  // Rows above the split times columns from the split on square to zero.
  std::uniform_int_distribution<std::size_t> split_dist(1, n - 1);
  const std::size_t split = split_dist(rng);
  std::vector<Scalar> data(n * n, Scalar::zero(algebra.ring()));
  for (std::size_t i = 0; i < split; ++i)
    for (std::size_t j = split; j < n; ++j) data[i * n + j] = random_scalar(algebra.ring(), rng, options);
  const AlgebraElement block = algebra.from_storage(std::move(data));
  const AlgebraElement u = random_unit(algebra, rng, options);
  return u * block * inverse(u);
}

std::vector<AlgebraElement> right_annihilator_basis(const AlgebraElement& b) {
  require_field(b.algebra(), "annihilator computation");
  std::vector<AlgebraElement> out;
  for (const auto& v : nullspace(left_multiplication_matrix(b))) out.push_back(b.algebra().from_coordinates(v));
  return out;
}

AlgebraElement random_in_span(const Algebra& algebra, const std::vector<AlgebraElement>& basis, Rng& rng,
                              const SamplingOptions& options) {
  AlgebraElement out = algebra.zero();
  for (const auto& v : basis) out += random_scalar(algebra.ring(), rng, options) * v;
  return out;
}

std::pair<AlgebraElement, AlgebraElement> random_zero_product_pair(const Algebra& algebra, Rng& rng,
                                                                   const SamplingOptions& options) {
  AlgebraElement b = random_element(algebra, rng, options);
  if (std::uniform_int_distribution<int>(0, 1)(rng) == 1) b = b * random_square_zero(algebra, rng, options);
  const auto annihilator = right_annihilator_basis(b);
  AlgebraElement c = random_in_span(algebra, annihilator, rng, options);
  return {std::move(b), std::move(c)};
}

std::optional<std::size_t> nilpotency_index(const AlgebraElement& x) {
  const std::size_t bound = x.algebra().size();
  AlgebraElement power = x;
  for (std::size_t m = 1; m <= bound; ++m) {
    if (power.is_zero()) return m;
    power = power * x;
  }
  return std::nullopt;
}

bool is_idempotent(const AlgebraElement& x) { return x * x == x; }

std::vector<AlgebraElement> square_zero_elements(const Algebra& algebra, std::uint64_t cap) {
  const ElementSpace space(algebra, cap);
  std::vector<AlgebraElement> out;
  for (std::uint64_t i = 0; i < space.size(); ++i) {
    AlgebraElement x = space.at(i);
    if ((x * x).is_zero()) out.push_back(std::move(x));
  }
  return out;
}

namespace {

std::vector<std::pair<AlgebraElement, AlgebraElement>> annihilating_pairs(const Algebra& algebra, std::uint64_t cap,
                                                                          bool include_zero) {
  const ElementSpace space(algebra, cap);
  std::vector<std::pair<AlgebraElement, AlgebraElement>> out;
  for (std::uint64_t i = 0; i < space.size(); ++i) {
    const AlgebraElement b = space.at(i);
    if (b.is_zero() && !include_zero) continue;
    const auto annihilator = right_annihilator_basis(b);
    const ElementSpace cs(algebra, annihilator, cap);
    for (std::uint64_t j = 0; j < cs.size(); ++j) {
      AlgebraElement c = cs.at(j);
      if (include_zero || !c.is_zero()) out.emplace_back(b, std::move(c));
    }
  }
  return out;
}

}  // namespace

std::vector<std::pair<AlgebraElement, AlgebraElement>> zero_divisor_pairs(const Algebra& algebra, std::uint64_t cap) {
  return annihilating_pairs(algebra, cap, false);
}

std::vector<std::pair<AlgebraElement, AlgebraElement>> zero_product_pairs(const Algebra& algebra, std::uint64_t cap) {
  return annihilating_pairs(algebra, cap, true);
}

std::vector<AlgebraElement> right_ideal_basis(const std::vector<AlgebraElement>& generators) {
  if (generators.empty()) throw Error(ErrorKind::InvalidArgument, "right ideal needs at least one generator");
  const Algebra& alg = generators.front().algebra();
  const auto basis = alg.basis();
  std::vector<std::vector<Scalar>> rows;
  for (const auto& g : generators) {
    if (g.algebra() != alg) throw Error(ErrorKind::DescriptorMismatch, "generators live in different algebras");
    for (const auto& e : basis) rows.push_back(coordinates(g * e));
  }
  DenseMatrix m(alg.ring(), rows.size(), alg.dimension());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < alg.dimension(); ++c) m.at(r, c) = rows[r][c];
  const auto pivots = row_reduce(m);
  std::vector<AlgebraElement> out;
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    std::vector<Scalar> coords(alg.dimension(), Scalar::zero(alg.ring()));
    for (std::size_t c = 0; c < alg.dimension(); ++c) coords[c] = m.at(r, c);
    out.push_back(alg.from_coordinates(coords));
  }
  return out;
}

AlgebraElement averaging_idempotent(const Algebra& group_algebra, std::size_t g) {
  const FiniteGroup& group = group_algebra.group();
  const std::size_t n = order_of(group, g);
  const Scalar order(group_algebra.ring(), static_cast<long long>(n));
  if (order.is_zero())
    throw Error(ErrorKind::OrderNotInvertible, "order " + std::to_string(n) + " of " + group.name(g) + " vanishes in " +
                                                   group_algebra.ring().to_string());
  AlgebraElement sum = group_algebra.zero();
  std::size_t x = group.identity();
  for (std::size_t k = 0; k < n; ++k, x = group.mul(x, g)) sum += group_algebra.group_element(x);
  return order.inverse() * sum;
}

bool is_central(const AlgebraElement& x) {
  for (const auto& e : x.algebra().basis())
    if (x * e != e * x) return false;
  return true;
}

std::vector<AlgebraElement> idempotents(const Algebra& algebra, std::uint64_t cap) {
  const ElementSpace space(algebra, cap);
  std::vector<AlgebraElement> out;
  for (std::uint64_t i = 0; i < space.size(); ++i) {
    AlgebraElement x = space.at(i);
    if (is_idempotent(x)) out.push_back(std::move(x));
  }
  return out;
}

SemiprimeVerdict is_semiprime_group_algebra(const Algebra& group_algebra) {
  const FiniteGroup& group = group_algebra.group();
  const Ring& ring = group_algebra.ring();
  if (ring.characteristic() == 0)
    return {true, "characteristic 0: K[G] is semiprime"};
  const std::uint64_t p = ring.characteristic();
  const ElementSet fc = fc_subgroup(group);
  bool p_prime = true;
  for (std::size_t g : fc)
    if (order_of(group, g) % p == 0) p_prime = false;
  if (p_prime)
    return {true, "characteristic " + std::to_string(p) + ": phi(G) (order " + std::to_string(fc.size()) +
                      ") is a p'-group, so K[G] is semiprime"};
  return {false, "characteristic " + std::to_string(p) + ": phi(G) (order " + std::to_string(fc.size()) +
                     ") contains elements of order divisible by p, so K[G] is not semiprime"};
}

}  // namespace lpi
