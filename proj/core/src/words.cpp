#include "lpi/words.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <optional>
#include <set>

#include "lpi/error.hpp"

namespace lpi {

namespace {

void push_reduced(std::vector<Syllable>& stack, const Syllable& s) {
  if (s.exponent == 0) return;
  if (!stack.empty() && stack.back().variable == s.variable) {
    stack.back().exponent += s.exponent;
    if (stack.back().exponent == 0) stack.pop_back();
    return;
  }
  stack.push_back(s);
}

}  // namespace

GroupWord GroupWord::generator(std::size_t variable, long long exponent) {
  if (variable == 0) throw Error(ErrorKind::InvalidArgument, "variables are numbered from 1");
  return from_syllables({{variable, exponent}});
}

GroupWord GroupWord::from_syllables(const std::vector<Syllable>& syllables) {
  GroupWord w;
  for (const auto& s : syllables) {
    if (s.variable == 0) throw Error(ErrorKind::InvalidArgument, "variables are numbered from 1");
    push_reduced(w.syllables_, s);
  }
  return w;
}

std::size_t GroupWord::length() const noexcept {
  std::size_t n = 0;
  for (const auto& s : syllables_) n += static_cast<std::size_t>(std::llabs(s.exponent));
  return n;
}

std::size_t GroupWord::max_variable() const noexcept {
  std::size_t m = 0;
  for (const auto& s : syllables_) m = std::max(m, s.variable);
  return m;
}

GroupWord GroupWord::inverse() const {
  GroupWord w;
  for (auto it = syllables_.rbegin(); it != syllables_.rend(); ++it) w.syllables_.push_back({it->variable, -it->exponent});
  return w;
}

GroupWord operator*(const GroupWord& u, const GroupWord& v) {
  GroupWord w = u;
  for (const auto& s : v.syllables_) push_reduced(w.syllables_, s);
  return w;
}

long long GroupWord::exp_sum(std::size_t variable) const noexcept {
  long long sum = 0;
  for (const auto& s : syllables_)
    if (s.variable == variable) sum += s.exponent;
  return sum;
}

long long GroupWord::total_exp_sum() const noexcept {
  long long sum = 0;
  for (const auto& s : syllables_) sum += s.exponent;
  return sum;
}

std::string GroupWord::to_string() const {
  if (syllables_.empty()) return "1";
  std::string out;
  for (const auto& s : syllables_) {
    if (!out.empty()) out += "*";
    out += "x" + std::to_string(s.variable);
    if (s.exponent != 1) out += "^" + std::to_string(s.exponent);
  }
  return out;
}

std::strong_ordering operator<=>(const GroupWord& u, const GroupWord& v) {
  if (auto c = u.length() <=> v.length(); c != 0) return c;
  return std::lexicographical_compare_three_way(u.syllables_.begin(), u.syllables_.end(), v.syllables_.begin(),
                                                v.syllables_.end());
}

LaurentPolynomial LaurentPolynomial::constant(const Scalar& c) { return monomial(c, GroupWord{}); }

LaurentPolynomial LaurentPolynomial::monomial(const Scalar& c, const GroupWord& w) {
  LaurentPolynomial p(c.ring());
  p.add_term(w, c);
  return p;
}

Scalar LaurentPolynomial::coefficient(const GroupWord& w) const {
  const auto it = terms_.find(w);
  return it == terms_.end() ? Scalar::zero(ring_) : it->second;
}

std::size_t LaurentPolynomial::max_variable() const noexcept {
  std::size_t m = 0;
  for (const auto& [w, c] : terms_) m = std::max(m, w.max_variable());
  return m;
}

bool LaurentPolynomial::has_negative_exponent() const noexcept {
  for (const auto& [w, c] : terms_)
    for (const auto& s : w.syllables())
      if (s.exponent < 0) return true;
  return false;
}

void LaurentPolynomial::add_term(const GroupWord& w, const Scalar& c) {
  if (!(c.ring() == ring_))
    throw Error(ErrorKind::RingMismatch, "coefficient in " + c.ring().to_string() + " added to polynomial over " +
                                             ring_.to_string());
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

LaurentPolynomial LaurentPolynomial::operator-() const {
  LaurentPolynomial out(ring_);
  for (const auto& [w, c] : terms_) out.terms_.emplace(w, -c);
  return out;
}

LaurentPolynomial operator+(const LaurentPolynomial& p, const LaurentPolynomial& q) {
  LaurentPolynomial out = p;
  for (const auto& [w, c] : q.terms_) out.add_term(w, c);
  return out;
}

LaurentPolynomial operator-(const LaurentPolynomial& p, const LaurentPolynomial& q) { return p + (-q); }

LaurentPolynomial operator*(const LaurentPolynomial& p, const LaurentPolynomial& q) {
  if (!(p.ring_ == q.ring_)) throw Error(ErrorKind::RingMismatch, "polynomials over different rings");
  LaurentPolynomial out(p.ring_);
  for (const auto& [u, a] : p.terms_)
    for (const auto& [v, b] : q.terms_) out.add_term(u * v, a * b);
  return out;
}

LaurentPolynomial operator*(const Scalar& c, const LaurentPolynomial& p) {
  LaurentPolynomial out(p.ring_);
  for (const auto& [w, a] : p.terms_) out.add_term(w, c * a);
  return out;
}

std::string LaurentPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [w, c] : terms_) {
    const bool negative = c.is_negative();
    const Scalar magnitude = negative ? -c : c;
    if (out.empty())
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    if (w.is_identity())
      out += magnitude.to_string();
    else if (magnitude.is_one())
      out += w.to_string();
    else
      out += magnitude.to_string() + "*" + w.to_string();
  }
  return out;
}

namespace {

class PolyParser {
 public:
  PolyParser(std::string_view text, const Ring& ring) : text_(text), ring_(ring) {}

  LaurentPolynomial parse() {
    LaurentPolynomial out(ring_);
    skip_ws();
    bool negate = false;
    if (peek() == '+' || peek() == '-') {
      negate = peek() == '-';
      ++pos_;
    }
    parse_term(out, negate);
    while (true) {
      skip_ws();
      if (at_end()) break;
      const char op = peek();
      if (op != '+' && op != '-') fail("expected '+' or '-'");
      ++pos_;
      parse_term(out, op == '-');
    }
    if (out.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "'" + std::string(text_) + "' is the zero polynomial");
    return out;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorKind::SyntaxError, what + " in '" + std::string(text_) + "'", pos_);
  }

  std::string_view digits() {
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == start) fail("expected digits");
    return text_.substr(start, pos_ - start);
  }

  long long signed_integer() {
    skip_ws();
    bool negative = false;
    if (peek() == '-' || peek() == '+') {
      negative = peek() == '-';
      ++pos_;
    }
    const std::size_t start = pos_;
    const auto d = digits();
    if (d.size() > 15) {
      pos_ = start;
      fail("exponent too large");
    }
    const long long v = std::stoll(std::string(d));
    return negative ? -v : v;
  }

  Scalar scalar() {
    const std::size_t start = pos_;
    if (peek() == '-') ++pos_;
    digits();
    if (peek() == '/') {
      ++pos_;
      digits();
    }
    try {
      return Scalar::parse(text_.substr(start, pos_ - start), ring_);
    } catch (const Error& e) {
      throw Error(e.kind(), std::string(e.what()), start);
    }
  }

  GroupWord factor() {
    skip_ws();
    if (peek() != 'x') fail("expected a variable x<index>");
    ++pos_;
    const std::size_t index_pos = pos_;
    const auto index_text = digits();
    if (index_text.size() > 9) {
      pos_ = index_pos;
      fail("variable index too large");
    }
    const auto index = static_cast<std::size_t>(std::stoul(std::string(index_text)));
    if (index == 0) {
      pos_ = index_pos;
      fail("variables are numbered from 1");
    }
    long long exponent = 1;
    skip_ws();
    if (peek() == '^') {
      ++pos_;
      exponent = signed_integer();
    }
    return GroupWord::from_syllables({{index, exponent}});
  }

  void parse_term(LaurentPolynomial& out, bool negate) {
    skip_ws();
    Scalar coefficient = Scalar::one(ring_);
    GroupWord word;
    if (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '-') {
      coefficient = scalar();
      skip_ws();
      if (peek() != '*') {
        out.add_term(word, negate ? -coefficient : coefficient);
        return;
      }
      ++pos_;
    }
    word = factor();
    while (true) {
      skip_ws();
      if (peek() != '*') break;
      ++pos_;
      word = word * factor();
    }
    out.add_term(word, negate ? -coefficient : coefficient);
  }

  std::string_view text_;
  Ring ring_;
  std::size_t pos_ = 0;
};

}  // namespace

LaurentPolynomial parse_poly(std::string_view text, const Ring& ring) { return PolyParser(text, ring).parse(); }

LaurentPolynomial substitute_power(const LaurentPolynomial& p, std::size_t variable, long long k) {
  if (k < 1) throw Error(ErrorKind::InvalidArgument, "substitution power must be at least 1");
  LaurentPolynomial out(p.ring());
  for (const auto& [w, c] : p.terms()) {
    std::vector<Syllable> s = w.syllables();
    for (auto& syl : s)
      if (syl.variable == variable) syl.exponent *= k;
    out.add_term(GroupWord::from_syllables(s), c);
  }
  return out;
}

LaurentPolynomial reduce_to_two_variables(const LaurentPolynomial& p) {
  LaurentPolynomial out(p.ring());
  for (const auto& [w, c] : p.terms()) {
    std::vector<Syllable> s;
    for (const auto& syl : w.syllables()) {
      const auto i = static_cast<long long>(syl.variable);
      s.push_back({1, -i});
      s.push_back({2, syl.exponent});
      s.push_back({1, i});
    }
    out.add_term(GroupWord::from_syllables(s), c);
  }
  return out;
}

std::vector<GroupWord> AdmissibilityReport::offenders() const {
  std::vector<GroupWord> out;
  for (const auto& d : words)
    if (d.offending) out.push_back(d.word);
  return out;
}

AdmissibilityReport diagnose_admissibility(const LaurentPolynomial& p) {
  std::set<std::size_t> variables;
  for (const auto& [w, c] : p.terms())
    for (const auto& s : w.syllables()) variables.insert(s.variable);
  AdmissibilityReport report{true, {}};
  for (const auto& [w, c] : p.terms()) {
    WordDiagnosis d{w, c, {}, w.total_exp_sum(), w.is_identity(), false};
    bool some_nonzero = false;
    for (std::size_t v : variables) {
      d.exp_sums[v] = w.exp_sum(v);
      if (d.exp_sums[v] != 0) some_nonzero = true;
    }
    d.offending = !d.constant && !some_nonzero;
    if (d.offending) report.admissible = false;
    report.words.push_back(std::move(d));
  }
  return report;
}

Evaluator::Evaluator(const LaurentPolynomial& p, const Algebra& algebra)
    : algebra_(algebra), arity_(p.max_variable()) {
  needs_inverse_.assign(arity_ + 1, false);
  for (const auto& [w, c] : p.terms()) {
    terms_.push_back({c.coerce_to(algebra.ring()), w});
    for (const auto& s : w.syllables())
      if (s.exponent < 0) needs_inverse_[s.variable] = true;
  }
}

AlgebraElement Evaluator::operator()(std::span<const AlgebraElement> values) const {
  if (values.size() < arity_)
    throw Error(ErrorKind::InvalidArgument, "evaluation needs " + std::to_string(arity_) + " values, got " +
                                                std::to_string(values.size()));
  std::vector<std::optional<AlgebraElement>> inverses(arity_ + 1);
  for (std::size_t v = 1; v <= arity_; ++v) {
    if (values[v - 1].algebra() != algebra_)
      throw Error(ErrorKind::DescriptorMismatch, "x" + std::to_string(v) + " is not an element of " + algebra_.to_string());
    if (!needs_inverse_[v]) continue;
    inverses[v] = try_inverse(values[v - 1]);
    if (!inverses[v]) {
      std::string word;
      for (const auto& t : terms_)
        if (std::any_of(t.word.syllables().begin(), t.word.syllables().end(),
                        [v](const Syllable& s) { return s.variable == v && s.exponent < 0; })) {
          word = t.word.to_string();
          break;
        }
      throw Error(ErrorKind::NotAUnit, "x" + std::to_string(v) + " = " + values[v - 1].to_string() +
                                           " is not a unit but word " + word + " inverts it");
    }
  }
  AlgebraElement sum = algebra_.zero();
  for (const auto& t : terms_) {
    AlgebraElement product = algebra_.one();
    bool first = true;
    for (const auto& s : t.word.syllables()) {
      const AlgebraElement& base = s.exponent < 0 ? *inverses[s.variable] : values[s.variable - 1];
      const auto e = static_cast<std::uint64_t>(std::llabs(s.exponent));
      AlgebraElement factor = e == 1 ? base : base.pow(e);
      product = first ? std::move(factor) : product * factor;
      first = false;
    }
    sum += t.coefficient * product;
  }
  return sum;
}

namespace {

Algebra algebra_of(const Assignment& assignment) {
  if (assignment.empty()) throw Error(ErrorKind::InvalidArgument, "evaluation needs at least one assigned element");
  return assignment.begin()->second.algebra();
}

const AlgebraElement& assigned(const Assignment& assignment, std::size_t v) {
  const auto it = assignment.find(v);
  if (it == assignment.end()) throw Error(ErrorKind::InvalidArgument, "x" + std::to_string(v) + " is not assigned");
  return it->second;
}

}  // namespace

AlgebraElement evaluate(const LaurentPolynomial& p, const Assignment& assignment) {
  const Algebra algebra = algebra_of(assignment);
  const Evaluator eval(p, algebra);
  // Only variables that actually occur must be assigned.
  std::vector<AlgebraElement> values(eval.arity(), algebra.one());
  std::set<std::size_t> used;
  for (const auto& [w, c] : p.terms())
    for (const auto& s : w.syllables()) used.insert(s.variable);
  for (std::size_t v : used) values[v - 1] = assigned(assignment, v);
  return eval(values);
}

AlgebraElement evaluate(const GroupWord& w, const Assignment& assignment) {
  const Algebra algebra = algebra_of(assignment);
  return evaluate(LaurentPolynomial::monomial(Scalar::one(algebra.ring()), w), assignment);
}

}  // namespace lpi
