#include "lpi/construction.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>

#include "lpi/error.hpp"

namespace lpi {

Scalar UnivariatePoly::coefficient(long long exponent) const {
  const auto it = coeffs_.find(exponent);
  return it == coeffs_.end() ? Scalar::zero(ring_) : it->second;
}

long long UnivariatePoly::degree() const {
  if (coeffs_.empty()) throw Error(ErrorKind::ZeroPolynomial, "degree of the zero polynomial");
  return coeffs_.rbegin()->first;
}

long long UnivariatePoly::valuation() const {
  if (coeffs_.empty()) throw Error(ErrorKind::ZeroPolynomial, "valuation of the zero polynomial");
  return coeffs_.begin()->first;
}

void UnivariatePoly::add_term(long long exponent, const Scalar& c) {
  if (!(c.ring() == ring_)) throw Error(ErrorKind::RingMismatch, "coefficient ring differs from polynomial ring");
  auto [it, inserted] = coeffs_.try_emplace(exponent, c);
  if (!inserted) it->second += c;
  if (it->second.is_zero()) coeffs_.erase(it);
}

UnivariatePoly UnivariatePoly::shifted(long long shift) const {
  UnivariatePoly out(ring_);
  for (const auto& [e, c] : coeffs_) out.coeffs_.emplace(e + shift, c);
  return out;
}

AlgebraElement UnivariatePoly::evaluate(const AlgebraElement& x) const {
  const Algebra& algebra = x.algebra();
  AlgebraElement sum = algebra.zero();
  AlgebraElement power = algebra.one();
  long long current = 0;
  for (const auto& [e, c] : coeffs_) {
    if (e < 0) throw Error(ErrorKind::PreconditionFailed, "evaluation of " + to_string() + " needs nonnegative exponents");
    if (e > current) {
      power = power * x.pow(static_cast<std::uint64_t>(e - current));
      current = e;
    }
    sum += c.coerce_to(algebra.ring()) * power;
  }
  return sum;
}

std::string UnivariatePoly::to_string(const std::string& variable) const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (const auto& [e, c] : coeffs_) {
    const bool negative = c.is_negative();
    const Scalar magnitude = negative ? -c : c;
    if (out.empty())
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    const std::string power = e == 1 ? variable : variable + "^" + std::to_string(e);
    if (e == 0)
      out += magnitude.to_string();
    else if (magnitude.is_one())
      out += power;
    else
      out += magnitude.to_string() + "*" + power;
  }
  return out;
}

namespace {

void require_admissible(const LaurentPolynomial& p, const std::string& context) {
  const AdmissibilityReport report = diagnose_admissibility(p);
  if (report.admissible) return;
  const auto offenders = report.offenders();
  std::string list;
  for (std::size_t i = 0; i < offenders.size() && i < 5; ++i) list += (i ? ", " : "") + offenders[i].to_string();
  if (offenders.size() > 5) list += ", ...";
  throw Error(ErrorKind::NotAdmissible, std::to_string(offenders.size()) + " nonconstant word(s)" + context +
                                            " with zero exponent sum in every variable: " + list);
}

}  // namespace

NormalizedPolynomial normalize_exponents(const LaurentPolynomial& p) {
  NormalizedPolynomial out{p, false, std::nullopt};
  require_admissible(p, "");
  if (p.max_variable() > 2) {
    out.poly = reduce_to_two_variables(p);
    out.reduced = true;
    require_admissible(out.poly, " of the two-variable form");
  }
  if (out.poly.constant_term().is_zero())
    throw Error(ErrorKind::MissingConstantTerm, "'" + p.to_string() + "' has no constant term");

  bool all_nonzero = true;
  long long max_x2 = 0;
  for (const auto& [w, c] : out.poly.terms()) {
    if (w.is_identity()) continue;
    if (w.total_exp_sum() == 0) all_nonzero = false;
    max_x2 = std::max(max_x2, std::llabs(w.exp_sum(2)));
  }
  if (all_nonzero) return out;

  const long long k = 1 + max_x2;
  out.poly = substitute_power(out.poly, 1, k);
  out.normalization = Normalization{1, k};
  for (const auto& [w, c] : out.poly.terms())
    if (!w.is_identity() && w.total_exp_sum() == 0)
      throw Error(ErrorKind::InternalError, "word " + w.to_string() + " still has total exponent sum 0 after x1 -> x1^" +
                                                std::to_string(k));
  return out;
}

Collapse collapse_to_univariate(const LaurentPolynomial& normalized) {
  const Ring& ring = normalized.ring();
  Collapse out{UnivariatePoly(ring), normalized.constant_term(), 0, 0, {}};
  long long nominal_l = 0;
  long long nominal_r = 0;
  bool any = false;
  Scalar total = Scalar::zero(ring);
  for (const auto& [w, c] : normalized.terms()) {
    total += c;
    if (w.is_identity()) continue;
    const long long sum = w.total_exp_sum();
    nominal_l = any ? std::min(nominal_l, sum) : sum;
    nominal_r = any ? std::max(nominal_r, sum) : sum;
    any = true;
    out.f0.add_term(sum, c);
  }
  if (!out.a1.is_zero()) out.f0.add_term(0, out.a1);

  UnivariatePoly nonconstant(ring);
  for (const auto& [e, c] : out.f0.coefficients())
    if (e != 0) nonconstant.add_term(e, c);
  if (nonconstant.is_zero())
    throw Error(ErrorKind::AllNonconstantCancelled,
                "every exponent-sum class of '" + normalized.to_string() + "' has zero total coefficient");
  out.l = nonconstant.valuation();
  out.r = nonconstant.degree();
  if (out.l != nominal_l || out.r != nominal_r)
    out.warnings.push_back("exponent-sum range [" + std::to_string(nominal_l) + ", " + std::to_string(nominal_r) +
                           "] trimmed to [" + std::to_string(out.l) + ", " + std::to_string(out.r) +
                           "] after cancellation");
  if (!total.is_zero())
    out.warnings.push_back("coefficient sum is " + total.to_string() +
                           ", not 0: P does not vanish at 1, so it is not a Laurent identity of any unital algebra");
  return out;
}

UnivariatePoly shift_positive(const UnivariatePoly& f0) {
  if (f0.is_zero()) return f0;
  const long long l = f0.valuation();
  return l < 0 ? f0.shifted(-l) : f0;
}

namespace {

using Monomials = std::map<std::string, Scalar>;

bool vanishes(const std::string& m) {
  return m.find("aa") != std::string::npos || m.find("bb") != std::string::npos;
}

// Right multiplication with the rewriting rules; monomials starting with b are
// dropped since ab*b... = 0.
Monomials multiply(const Monomials& x, const Monomials& y) {
  Monomials out;
  for (const auto& [m, c] : x)
    for (const auto& [n, e] : y) {
      std::string w = m + n;
      if (vanishes(w) || (!w.empty() && w.front() == 'b')) continue;
      auto [it, inserted] = out.try_emplace(std::move(w), c * e);
      if (!inserted) it->second += c * e;
    }
  std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
  return out;
}

}  // namespace

UnivariatePoly derive_f2(const UnivariatePoly& f1) {
  const Ring& ring = f1.ring();
  if (f1.is_zero()) return UnivariatePoly(ring);
  if (f1.valuation() < 0)
    throw Error(ErrorKind::PreconditionFailed, "derive_f2 needs nonnegative exponents; shift first");
  const Scalar one = Scalar::one(ring);
  const Monomials alpha{{"", one}, {"aua", one}, {"bauab", one}, {"auabauab", one}};

  Monomials sum;
  Monomials power{{"", one}};
  long long h = 0;
  for (const auto& [e, c] : f1.coefficients()) {
    while (h < e) {
      power = multiply(power, alpha);
      ++h;
    }
    for (const auto& [m, k] : power) {
      auto [it, inserted] = sum.try_emplace(m, c * k);
      if (!inserted) it->second += c * k;
    }
  }

  UnivariatePoly f2(ring);
  for (const auto& [m, c] : sum) {
    if (c.is_zero()) continue;
    const std::string w = "ab" + m + "au";
    if (vanishes(w)) continue;
    bool is_power = w.size() % 4 == 0;
    for (std::size_t i = 0; is_power && i < w.size(); i += 4) is_power = w.compare(i, 4, "abau") == 0;
    if (!is_power) throw Error(ErrorKind::NonPowerMonomial, "monomial " + w + " is not a power of abau");
    f2.add_term(static_cast<long long>(w.size() / 4), c);
  }
  return f2;
}

UnivariatePoly derive_f(const UnivariatePoly& f2) {
  UnivariatePoly f(f2.ring());
  for (const auto& [j, c] : f2.coefficients()) f.add_term(2 * j + 1, c);
  return f;
}

ConstructionReport derive(const LaurentPolynomial& p) {
  NormalizedPolynomial normalized = normalize_exponents(p);
  Collapse collapse = collapse_to_univariate(normalized.poly);
  UnivariatePoly f1 = shift_positive(collapse.f0);
  UnivariatePoly f2 = derive_f2(f1);
  UnivariatePoly f = derive_f(f2);
  const long long r_eff = f1.degree();
  const long long d = f.is_zero() ? 0 : f.degree();
  ConstructionReport report{p,
                            std::move(normalized),
                            std::move(collapse.f0),
                            collapse.a1,
                            collapse.l,
                            collapse.r,
                            std::move(f1),
                            std::move(f2),
                            std::move(f),
                            d,
                            r_eff,
                            2 * r_eff + 1,
                            4 * r_eff + 3,
                            std::move(collapse.warnings)};
  if (report.normalized.reduced)
    report.warnings.insert(report.warnings.begin(), "more than two variables: x_i replaced by x1^-i*x2*x1^i");
  if (report.normalized.normalization)
    report.warnings.push_back("x1 replaced by x1^" + std::to_string(report.normalized.normalization->k) +
                              " so every word has nonzero total exponent sum");
  if (report.f2.is_zero()) report.warnings.push_back("f2 vanishes identically");
  return report;
}

AlgebraElement f2_identity_gap(const UnivariatePoly& f1, const UnivariatePoly& f2, const AlgebraElement& a,
                               const AlgebraElement& b, const AlgebraElement& u) {
  const Algebra& algebra = a.algebra();
  const AlgebraElement one = algebra.one();
  const AlgebraElement alpha = (one + a * u * a) * (one + b * a * u * a * b);
  const AlgebraElement lhs = a * b * f1.evaluate(alpha) * a * u;
  return lhs - f2.evaluate(a * b * a * u);
}

namespace {

std::optional<AlgebraElement> nonzero(AlgebraElement x) {
  if (x.is_zero()) return std::nullopt;
  return x;
}

}  // namespace

Verdict verify_f2_layer(const Algebra& algebra, const UnivariatePoly& f2, const CheckMode& mode) {
  Quantifier q;
  q.names = {"a", "b", "u"};
  q.pools = [algebra] {
    auto sqz = singleton_pool(square_zero_elements(algebra));
    auto all = singleton_pool(enumerate_elements(algebra));
    return std::vector<std::shared_ptr<const Quantifier::Pool>>{sqz, sqz, all};
  };
  q.sample = [algebra, sampling = mode.sampling](Rng& rng) {
    Quantifier::Tuple t;
    t.push_back(random_square_zero(algebra, rng, sampling));
    t.push_back(random_square_zero(algebra, rng, sampling));
    t.push_back(random_element(algebra, rng, sampling));
    return t;
  };
  q.test = [f2](std::span<const AlgebraElement> t) { return nonzero(f2.evaluate(t[0] * t[1] * t[0] * t[2])); };
  return run_quantifier(q, mode);
}

Verdict verify_f_layer(const Algebra& algebra, const UnivariatePoly& f, const CheckMode& mode) {
  Quantifier q;
  q.names = {"a", "b", "c", "u"};
  q.pools = [algebra] {
    auto sqz = singleton_pool(square_zero_elements(algebra));
    auto pairs = std::make_shared<Quantifier::Pool>();
    for (auto& [b, c] : zero_product_pairs(algebra)) pairs->push_back({std::move(b), std::move(c)});
    auto all = singleton_pool(enumerate_elements(algebra));
    return std::vector<std::shared_ptr<const Quantifier::Pool>>{sqz, pairs, all};
  };
  q.sample = [algebra, sampling = mode.sampling](Rng& rng) {
    Quantifier::Tuple t;
    t.push_back(random_square_zero(algebra, rng, sampling));
    auto [b, c] = random_zero_product_pair(algebra, rng, sampling);
    t.push_back(std::move(b));
    t.push_back(std::move(c));
    t.push_back(random_element(algebra, rng, sampling));
    return t;
  };
  q.test = [f](std::span<const AlgebraElement> t) { return nonzero(f.evaluate(t[1] * t[0] * t[2] * t[3])); };
  return run_quantifier(q, mode);
}

Theorem1Report verify_theorem1(const Algebra& algebra, const LaurentPolynomial& p, const CheckMode& mode) {
  ConstructionReport construction = derive(p);
  Verdict premise = check_lpi(algebra, p, mode);
  Verdict f2_layer = verify_f2_layer(algebra, construction.f2, mode);
  Verdict f_layer = verify_f_layer(algebra, construction.f, mode);
  const bool vacuous = !premise.holds();
  return {std::move(construction), std::move(premise), std::move(f2_layer), std::move(f_layer), vacuous};
}

std::vector<AlgebraElement> solve_vandermonde(const std::vector<Scalar>& points,
                                              const std::vector<AlgebraElement>& values) {
  const std::size_t m = points.size();
  if (values.size() != m || m == 0)
    throw Error(ErrorKind::InvalidArgument, "need one value per point and at least one point");
  for (std::size_t i = 0; i < m; ++i) {
    if (points[i].is_zero()) throw Error(ErrorKind::InvalidArgument, "Vandermonde points must be nonzero");
    for (std::size_t j = 0; j < i; ++j)
      if (points[i] == points[j]) throw Error(ErrorKind::InvalidArgument, "Vandermonde points must be distinct");
  }
  // Q(lambda) = value / lambda has degree m - 1; Newton divided differences.
  std::vector<AlgebraElement> dd;
  for (std::size_t k = 0; k < m; ++k) dd.push_back(points[k].inverse() * values[k]);
  for (std::size_t j = 1; j < m; ++j)
    for (std::size_t k = m - 1; k >= j; --k) dd[k] = (points[k] - points[k - j]).inverse() * (dd[k] - dd[k - 1]);

  const Algebra& algebra = values.front().algebra();
  std::vector<AlgebraElement> coef{dd[m - 1]};
  for (std::size_t k = m - 1; k-- > 0;) {
    std::vector<AlgebraElement> next(coef.size() + 1, algebra.zero());
    for (std::size_t i = 0; i < coef.size(); ++i) {
      next[i + 1] += coef[i];
      next[i] += (-points[k]) * coef[i];
    }
    next[0] += dd[k];
    coef = std::move(next);
  }
  coef.resize(m, algebra.zero());
  return coef;
}

VandermondeResult vandermonde_extract(const UnivariatePoly& f, const AlgebraElement& a, const AlgebraElement& b,
                                      const AlgebraElement& c, const AlgebraElement& u) {
  const Algebra& algebra = a.algebra();
  const Ring& ring = algebra.ring();
  if (!ring.is_field()) throw Error(ErrorKind::PreconditionFailed, "Vandermonde extraction needs field scalars");
  if (!(a * a).is_zero()) throw Error(ErrorKind::PreconditionFailed, "a = " + a.to_string() + " has a^2 != 0");
  if (!(b * c).is_zero())
    throw Error(ErrorKind::PreconditionFailed, "bc != 0 for b = " + b.to_string() + ", c = " + c.to_string());
  if (f.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "f is zero");
  const auto d = static_cast<std::size_t>(f.degree());
  VandermondeResult out{b * a * c * u, d, distinct_scalars(ring, d), {}, true, std::nullopt, false, false};
  std::vector<AlgebraElement> values;
  for (const auto& lambda : out.points) values.push_back(f.evaluate(b * a * c * (lambda * u)));
  out.components = solve_vandermonde(out.points, values);
  for (std::size_t i = 0; i < out.components.size(); ++i)
    if (!out.components[i].is_zero()) {
      out.all_zero = false;
      out.inconsistent = true;
      if (!out.offending) out.offending = i + 1;
    }
  out.power_zero = out.s.pow(d).is_zero();
  return out;
}

std::string to_string(C2Outcome outcome) {
  switch (outcome) {
    case C2Outcome::LargeFieldHolds: return "LargeFieldHolds";
    case C2Outcome::LargeFieldFails: return "LargeFieldFails";
    case C2Outcome::NilpotentHolds: return "NilpotentHolds";
    case C2Outcome::NilpotentFails: return "NilpotentFails";
    case C2Outcome::NeitherCaseApplies: return "NeitherCaseApplies";
  }
  return "?";
}

namespace {

bool field_exceeds(const Ring& ring, long long bound) {
  return !ring.is_finite() || ring.modulus() > static_cast<std::uint64_t>(bound);
}

}  // namespace

C2PairResult corollary_c2_pair(const AlgebraElement& a, const AlgebraElement& b, long long d) {
  if (d < 1) throw Error(ErrorKind::InvalidArgument, "d must be positive");
  if (!(a * a).is_zero() || !(b * b).is_zero())
    throw Error(ErrorKind::PreconditionFailed, "a and b must square to zero");
  const AlgebraElement ab = a * b;
  const auto index = nilpotency_index(ab);
  const bool vanishes_at_bound = ab.pow(static_cast<std::uint64_t>(2 * d)).is_zero();
  if (field_exceeds(a.algebra().ring(), 2 * d))
    return {vanishes_at_bound ? C2Outcome::LargeFieldHolds : C2Outcome::LargeFieldFails, index};
  if (!index) return {C2Outcome::NeitherCaseApplies, std::nullopt};
  return {vanishes_at_bound ? C2Outcome::NilpotentHolds : C2Outcome::NilpotentFails, index};
}

C2Report corollary_c2_check(const Algebra& algebra, long long d, const CheckMode& mode) {
  mode.validate();
  C2Report report{Verdict{}, d, 2 * d, field_exceeds(algebra.ring(), 2 * d), 0, std::nullopt, 0, std::nullopt};
  report.verdict.exhaustive = mode.is_exhaustive();
  report.verdict.seed = mode.seed;

  std::vector<AlgebraElement> sqz;
  std::uint64_t count = mode.trials;
  if (mode.is_exhaustive()) {
    sqz = square_zero_elements(algebra);
    count = static_cast<std::uint64_t>(sqz.size()) * sqz.size();
    if (count > mode.budget)
      throw Error(ErrorKind::TooLarge, std::to_string(count) + " square-zero pairs exceed the budget of " +
                                           std::to_string(mode.budget));
  } else {
    report.verdict.trials = mode.trials;
  }

  for (std::uint64_t i = 0; i < count; ++i) {
    AlgebraElement a = algebra.zero();
    AlgebraElement b = algebra.zero();
    if (mode.is_exhaustive()) {
      a = sqz[i / sqz.size()];
      b = sqz[i % sqz.size()];
    } else {
      Rng rng = trial_rng(mode.seed, i);
      a = random_square_zero(algebra, rng, mode.sampling);
      b = random_square_zero(algebra, rng, mode.sampling);
    }
    ++report.pairs;
    const C2PairResult r = corollary_c2_pair(a, b, d);
    if (r.index) report.max_index = std::max(report.max_index.value_or(0), *r.index);
    if (r.outcome == C2Outcome::NeitherCaseApplies) {
      if (!report.neither_example) report.neither_example = std::make_pair(a, b);
      ++report.neither_case;
      continue;
    }
    if (r.outcome == C2Outcome::LargeFieldFails || r.outcome == C2Outcome::NilpotentFails) {
      report.verdict.status = VerdictStatus::Fails;
      report.verdict.evaluations = i + 1;
      report.verdict.witness_index = i;
      report.verdict.value = (a * b).pow(static_cast<std::uint64_t>(2 * d));
      report.verdict.witness = {{"a", a}, {"b", b}};
      if (!mode.is_exhaustive()) report.verdict.trials = i + 1;
      return report;
    }
  }
  report.verdict.status = mode.is_exhaustive() ? VerdictStatus::Holds : VerdictStatus::HoldsProbably;
  report.verdict.evaluations = count;
  return report;
}

}  // namespace lpi
