#include "lpi/identity_engine.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <limits>
#include <mutex>
#include <numeric>
#include <set>
#include <thread>

#include "lpi/error.hpp"

namespace lpi {

CheckMode CheckMode::exhaustive(std::uint64_t budget) {
  CheckMode m;
  m.kind = Kind::Exhaustive;
  m.budget = budget;
  return m;
}

CheckMode CheckMode::random(std::uint64_t trials, std::uint64_t seed) {
  CheckMode m;
  m.kind = Kind::Random;
  m.trials = trials;
  m.seed = seed;
  return m;
}

void CheckMode::validate() const {
  if (jobs == 0) throw Error(ErrorKind::InvalidArgument, "jobs must be at least 1");
  if (kind == Kind::Random) {
    if (trials == 0) throw Error(ErrorKind::InvalidArgument, "trials must be at least 1");
    if (budget < trials)
      throw Error(ErrorKind::InvalidArgument,
                  "budget " + std::to_string(budget) + " is below the trial count " + std::to_string(trials));
  }
}

std::string to_string(VerdictStatus status) {
  switch (status) {
    case VerdictStatus::Holds: return "Holds";
    case VerdictStatus::HoldsProbably: return "HoldsProbably";
    case VerdictStatus::Fails: return "Fails";
  }
  return "?";
}

std::string describe(const Verdict& verdict) {
  std::string out = to_string(verdict.status);
  if (verdict.exhaustive)
    out += " (exhaustive, " + std::to_string(verdict.evaluations) + " evaluations)";
  else
    out += " (" + std::to_string(verdict.trials) + " trials, seed " + std::to_string(verdict.seed) + ")";
  if (verdict.status == VerdictStatus::Fails) {
    out += " witness:";
    for (const auto& w : verdict.witness) out += " " + w.name + " = " + w.value.pretty();
    if (verdict.value) out += "; value " + verdict.value->pretty();
  }
  return out;
}

Rng trial_rng(std::uint64_t seed, std::uint64_t trial) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(trial), static_cast<std::uint32_t>(trial >> 32)};
  return Rng(seq);
}

std::shared_ptr<const Quantifier::Pool> singleton_pool(const std::vector<AlgebraElement>& elements) {
  auto pool = std::make_shared<Quantifier::Pool>();
  pool->reserve(elements.size());
  for (const auto& e : elements) pool->push_back({e});
  return pool;
}

namespace {

constexpr std::uint64_t kNone = std::numeric_limits<std::uint64_t>::max();
constexpr std::uint64_t kChunk = 256;

struct Scan {
  std::function<Quantifier::Tuple(std::uint64_t)> tuple_at;
  std::uint64_t count;
};

// Evaluates indices [0, count) and returns the lowest failing one.
std::uint64_t lowest_failure(const Scan& scan, const Quantifier& q, std::size_t jobs) {
  std::atomic<std::uint64_t> best{kNone};
  std::exception_ptr error;
  std::uint64_t error_index = kNone;
  std::mutex error_mutex;
  std::atomic<std::uint64_t> next_chunk{0};
  const std::uint64_t chunks = (scan.count + kChunk - 1) / kChunk;

  auto worker = [&] {
    while (true) {
      const std::uint64_t chunk = next_chunk.fetch_add(1);
      if (chunk >= chunks) return;
      const std::uint64_t begin = chunk * kChunk;
      const std::uint64_t end = std::min(scan.count, begin + kChunk);
      for (std::uint64_t i = begin; i < end; ++i) {
        if (i >= best.load(std::memory_order_relaxed)) return;
        try {
          const auto tuple = scan.tuple_at(i);
          if (q.test(tuple)) {
            std::uint64_t cur = best.load();
            while (i < cur && !best.compare_exchange_weak(cur, i)) {
            }
            return;
          }
        } catch (...) {
          std::lock_guard lock(error_mutex);
          if (i < error_index) {
            error_index = i;
            error = std::current_exception();
          }
          std::uint64_t cur = best.load();
          while (i < cur && !best.compare_exchange_weak(cur, i)) {
          }
          return;
        }
      }
    }
  };

  const std::size_t threads = std::max<std::size_t>(1, std::min<std::uint64_t>(jobs, chunks));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (error && error_index == best.load()) std::rethrow_exception(error);
  return best.load();
}

}  // namespace

Verdict run_quantifier(const Quantifier& q, const CheckMode& mode) {
  mode.validate();
  Verdict verdict;
  verdict.exhaustive = mode.is_exhaustive();
  verdict.seed = mode.seed;

  Scan scan;
  std::vector<std::shared_ptr<const Quantifier::Pool>> pools;
  if (mode.is_exhaustive()) {
    pools = q.pools();
    std::uint64_t count = 1;
    bool over = false;
    for (const auto& pool : pools) {
      if (pool->empty()) {
        count = 0;
        over = false;
        break;
      }
      if (!over && count > mode.budget / pool->size()) over = true;
      if (!over) count *= pool->size();
    }
    if (over)
      throw Error(ErrorKind::TooLarge, "exhaustive check needs more than the budget of " +
                                           std::to_string(mode.budget) + " evaluations");
    scan.count = count;
    scan.tuple_at = [&pools](std::uint64_t index) {
      std::vector<std::size_t> digits(pools.size());
      for (std::size_t k = pools.size(); k-- > 0;) {
        digits[k] = static_cast<std::size_t>(index % pools[k]->size());
        index /= pools[k]->size();
      }
      Quantifier::Tuple tuple;
      for (std::size_t k = 0; k < pools.size(); ++k) {
        const auto& part = (*pools[k])[digits[k]];
        tuple.insert(tuple.end(), part.begin(), part.end());
      }
      return tuple;
    };
  } else {
    scan.count = mode.trials;
    scan.tuple_at = [&q, &mode](std::uint64_t trial) {
      Rng rng = trial_rng(mode.seed, trial);
      return q.sample(rng);
    };
    verdict.trials = mode.trials;
  }

  const std::uint64_t failure = lowest_failure(scan, q, mode.jobs);
  if (failure == kNone) {
    verdict.status = mode.is_exhaustive() ? VerdictStatus::Holds : VerdictStatus::HoldsProbably;
    verdict.evaluations = scan.count;
    return verdict;
  }
  const auto tuple = scan.tuple_at(failure);
  verdict.status = VerdictStatus::Fails;
  verdict.evaluations = failure + 1;
  if (!mode.is_exhaustive()) verdict.trials = failure + 1;
  verdict.witness_index = failure;
  verdict.value = q.test(tuple);
  for (std::size_t i = 0; i < tuple.size(); ++i)
    verdict.witness.push_back({i < q.names.size() ? q.names[i] : "x" + std::to_string(i + 1), tuple[i]});
  return verdict;
}

namespace {

std::vector<std::size_t> occurring_variables(const LaurentPolynomial& p) {
  std::set<std::size_t> used;
  for (const auto& [w, c] : p.terms())
    for (const auto& s : w.syllables()) used.insert(s.variable);
  return {used.begin(), used.end()};
}

std::vector<std::string> variable_names(const std::vector<std::size_t>& vars) {
  std::vector<std::string> names;
  for (std::size_t v : vars) names.push_back("x" + std::to_string(v));
  return names;
}

// Spreads a tuple over the occurring variable slots, with 1 elsewhere.
std::function<std::optional<AlgebraElement>(std::span<const AlgebraElement>)> polynomial_test(
    const LaurentPolynomial& p, const Algebra& algebra, std::vector<std::size_t> vars) {
  auto eval = std::make_shared<const Evaluator>(p, algebra);
  return [eval, algebra, vars = std::move(vars)](std::span<const AlgebraElement> tuple) -> std::optional<AlgebraElement> {
    std::vector<AlgebraElement> slots(eval->arity(), algebra.one());
    for (std::size_t i = 0; i < vars.size(); ++i) slots[vars[i] - 1] = tuple[i];
    AlgebraElement value = (*eval)(slots);
    if (value.is_zero()) return std::nullopt;
    return value;
  };
}

}  // namespace

Verdict check_lpi(const Algebra& algebra, const LaurentPolynomial& p, const CheckMode& mode) {
  const auto vars = occurring_variables(p);
  Quantifier q;
  q.names = variable_names(vars);
  q.pools = [algebra, n = vars.size()] {
    auto units = singleton_pool(enumerate_units(algebra));
    return std::vector<std::shared_ptr<const Quantifier::Pool>>(n, units);
  };
  q.sample = [algebra, n = vars.size(), sampling = mode.sampling](Rng& rng) {
    Quantifier::Tuple t;
    for (std::size_t i = 0; i < n; ++i) t.push_back(random_unit(algebra, rng, sampling));
    return t;
  };
  q.test = polynomial_test(p, algebra, vars);
  return run_quantifier(q, mode);
}

Verdict check_pi(const Algebra& algebra, const LaurentPolynomial& p, const CheckMode& mode,
                 const std::optional<std::vector<AlgebraElement>>& ideal_generators) {
  if (p.has_negative_exponent())
    throw Error(ErrorKind::NegativeExponent,
                "'" + p.to_string() + "' has negative exponents; a polynomial identity is evaluated on non-units");
  const auto vars = occurring_variables(p);
  std::optional<std::vector<AlgebraElement>> span_basis;
  if (ideal_generators) span_basis = right_ideal_basis(*ideal_generators);
  Quantifier q;
  q.names = variable_names(vars);
  q.pools = [algebra, span_basis, n = vars.size()] {
    const ElementSpace space = span_basis ? ElementSpace(algebra, *span_basis) : ElementSpace(algebra);
    auto pool = singleton_pool(space.materialize());
    return std::vector<std::shared_ptr<const Quantifier::Pool>>(n, pool);
  };
  q.sample = [algebra, span_basis, n = vars.size(), sampling = mode.sampling](Rng& rng) {
    Quantifier::Tuple t;
    for (std::size_t i = 0; i < n; ++i)
      t.push_back(span_basis ? random_in_span(algebra, *span_basis, rng, sampling)
                             : random_element(algebra, rng, sampling));
    return t;
  };
  q.test = polynomial_test(p, algebra, vars);
  return run_quantifier(q, mode);
}

LaurentPolynomial standard_polynomial(std::size_t n, const Ring& ring, std::size_t max_degree) {
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "standard polynomial degree must be at least 1");
  if (n > max_degree)
    throw Error(ErrorKind::DegreeTooLarge,
                "degree " + std::to_string(n) + " exceeds the limit " + std::to_string(max_degree));
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{1});
  LaurentPolynomial out(ring);
  do {
    std::size_t inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    std::vector<Syllable> s;
    for (std::size_t v : perm) s.push_back({v, 1});
    out.add_term(GroupWord::from_syllables(s), inversions % 2 == 0 ? Scalar::one(ring) : -Scalar::one(ring));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

Verdict check_standard(const Algebra& algebra, std::size_t n, const CheckMode& mode, std::size_t max_degree) {
  return check_pi(algebra, standard_polynomial(n, algebra.ring(), max_degree), mode);
}

Verdict check_group_identity(const Algebra& algebra, const GroupWord& w, const CheckMode& mode) {
  const auto p = LaurentPolynomial::monomial(Scalar::one(algebra.ring()), w);
  const auto vars = occurring_variables(p);
  Quantifier q;
  q.names = variable_names(vars);
  q.pools = [algebra, n = vars.size()] {
    auto units = singleton_pool(enumerate_units(algebra));
    return std::vector<std::shared_ptr<const Quantifier::Pool>>(n, units);
  };
  q.sample = [algebra, n = vars.size(), sampling = mode.sampling](Rng& rng) {
    Quantifier::Tuple t;
    for (std::size_t i = 0; i < n; ++i) t.push_back(random_unit(algebra, rng, sampling));
    return t;
  };
  auto eval = std::make_shared<const Evaluator>(p, algebra);
  q.test = [eval, algebra, vars](std::span<const AlgebraElement> tuple) -> std::optional<AlgebraElement> {
    std::vector<AlgebraElement> slots(eval->arity(), algebra.one());
    for (std::size_t i = 0; i < vars.size(); ++i) slots[vars[i] - 1] = tuple[i];
    AlgebraElement value = (*eval)(slots);
    if (value.is_one()) return std::nullopt;
    return value;
  };
  return run_quantifier(q, mode);
}

GeneralizedPolynomial::GeneralizedPolynomial(Algebra algebra, std::size_t n) : algebra_(std::move(algebra)), n_(n) {
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "generalized polynomial degree must be at least 1");
}

void GeneralizedPolynomial::add_term(GpiTerm term) {
  if (term.order.size() != n_ || term.coefficients.size() != n_ + 1)
    throw Error(ErrorKind::InvalidArgument, "a degree-" + std::to_string(n_) + " term needs " + std::to_string(n_) +
                                                " variables and " + std::to_string(n_ + 1) + " coefficients");
  std::vector<std::size_t> sorted = term.order;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < n_; ++i)
    if (sorted[i] != i + 1) throw Error(ErrorKind::InvalidArgument, "term order is not a permutation of 1..n");
  for (const auto& c : term.coefficients)
    if (c.algebra() != algebra_)
      throw Error(ErrorKind::DescriptorMismatch, "coefficient " + c.to_string() + " is not in " + algebra_.to_string());
  terms_.push_back(std::move(term));
}

std::vector<std::vector<std::size_t>> GeneralizedPolynomial::orders() const {
  std::vector<std::vector<std::size_t>> out;
  for (const auto& t : terms_)
    if (std::find(out.begin(), out.end(), t.order) == out.end()) out.push_back(t.order);
  return out;
}

GeneralizedPolynomial GeneralizedPolynomial::component(const std::vector<std::size_t>& order) const {
  GeneralizedPolynomial out(algebra_, n_);
  for (const auto& t : terms_)
    if (t.order == order) out.terms_.push_back(t);
  return out;
}

AlgebraElement GeneralizedPolynomial::evaluate(std::span<const AlgebraElement> values) const {
  if (values.size() < n_)
    throw Error(ErrorKind::InvalidArgument, "evaluation needs " + std::to_string(n_) + " values");
  AlgebraElement sum = algebra_.zero();
  for (const auto& t : terms_) {
    AlgebraElement product = t.coefficients[0];
    for (std::size_t i = 0; i < n_; ++i) product = product * values[t.order[i] - 1] * t.coefficients[i + 1];
    sum += product;
  }
  return sum;
}

Verdict check_gpi(const GeneralizedPolynomial& g, const CheckMode& mode) {
  const Algebra algebra = g.algebra();
  const std::size_t n = g.degree();
  Quantifier q;
  for (std::size_t v = 1; v <= n; ++v) q.names.push_back("x" + std::to_string(v));
  q.pools = [algebra, n] {
    auto pool = singleton_pool(enumerate_elements(algebra));
    return std::vector<std::shared_ptr<const Quantifier::Pool>>(n, pool);
  };
  q.sample = [algebra, n, sampling = mode.sampling](Rng& rng) {
    Quantifier::Tuple t;
    for (std::size_t i = 0; i < n; ++i) t.push_back(random_element(algebra, rng, sampling));
    return t;
  };
  auto shared = std::make_shared<const GeneralizedPolynomial>(g);
  q.test = [shared](std::span<const AlgebraElement> tuple) -> std::optional<AlgebraElement> {
    AlgebraElement value = shared->evaluate(tuple);
    if (value.is_zero()) return std::nullopt;
    return value;
  };
  return run_quantifier(q, mode);
}

NondegeneracyReport nondegeneracy(const GeneralizedPolynomial& g, const CheckMode& mode) {
  NondegeneracyReport report{false, {}};
  for (const auto& order : g.orders()) {
    Verdict v = check_gpi(g.component(order), mode);
    if (!v.holds()) report.nondegenerate = true;
    report.components.emplace_back(order, std::move(v));
  }
  return report;
}

}  // namespace lpi
