#include "lpi/hartley.hpp"

#include <algorithm>
#include <sstream>

#include "lpi/construction.hpp"
#include "lpi/error.hpp"

namespace lpi {

std::size_t HartleyReport::averaging_defined() const {
  return static_cast<std::size_t>(
      std::count_if(averaging.begin(), averaging.end(), [](const AveragingCheck& c) { return c.idempotent.has_value(); }));
}

bool HartleyReport::all_averaging_central() const {
  return std::all_of(averaging.begin(), averaging.end(),
                     [](const AveragingCheck& c) { return !c.idempotent || (c.is_idempotent && c.central); });
}

namespace {

bool fits(const Algebra& algebra, std::uint64_t limit) {
  const auto card = algebra.cardinality();
  return card && *card <= limit;
}

}  // namespace

HartleyReport analyze(const FiniteGroup& group, const std::string& group_spec, const Ring& field,
                      const CheckMode& mode) {
  if (!field.is_field()) throw Error(ErrorKind::InvalidArgument, "group-algebra analysis needs Q or GF(p)");
  const Algebra kg = Algebra::group_algebra(group, field, group_spec);
  HartleyReport report{group_spec,
                       group.order(),
                       field,
                       is_semiprime_group_algebra(kg),
                       0,
                       0,
                       {},
                       {},
                       classify(group),
                       find_abelian_index2_subgroup(group),
                       Verdict{},
                       std::nullopt,
                       std::nullopt,
                       false,
                       false,
                       {}};
  const ElementSet fc = fc_subgroup(group);
  report.fc_size = fc.size();
  report.fc_derived_size = derived_subgroup(group, fc).size();

  for (std::size_t g = 0; g < group.order(); ++g) {
    AveragingCheck check{g, group.name(g), order_of(group, g), std::nullopt};
    try {
      AlgebraElement e = averaging_idempotent(kg, g);
      check.is_idempotent = is_idempotent(e);
      check.central = is_central(e);
      check.idempotent = std::move(e);
    } catch (const Error& err) {
      if (err.kind() != ErrorKind::OrderNotInvertible) throw;
    }
    report.averaging.push_back(std::move(check));
  }

  if (fits(kg, kFullIdempotentScanLimit)) {
    report.full_scan.performed = true;
    for (const auto& e : idempotents(kg, kFullIdempotentScanLimit)) {
      ++report.full_scan.idempotents;
      if (is_central(e))
        ++report.full_scan.central;
      else if (!report.full_scan.noncentral_example)
        report.full_scan.noncentral_example = e;
    }
  } else {
    report.full_scan.skipped_reason = "K[G] has more than " + std::to_string(kFullIdempotentScanLimit) + " elements";
  }

  report.s4 = check_standard(kg, 4, mode);

  if (report.classification.kind == GroupKind::Abelian) {
    Algebra companion = kg;
    if (!fits(kg, kFullIdempotentScanLimit)) companion = Algebra::group_algebra(group, Ring::prime_field(2), group_spec);
    if (fits(companion, kFullIdempotentScanLimit)) {
      report.s2 = check_standard(companion, 2, CheckMode::exhaustive(mode.budget));
      report.s2_field = companion.ring();
    }
  }

  const bool dedekind = report.classification.kind != GroupKind::NonDedekind;
  if (report.semiprime.semiprime && dedekind) {
    if (!report.all_averaging_central()) report.idempotent_violation = true;
    if (report.full_scan.performed && report.full_scan.central != report.full_scan.idempotents)
      report.idempotent_violation = true;
  }
  if (dedekind && !report.s4.holds()) report.s4_violation = true;

  report.notes.push_back("G is finite, so phi(G) = G has finite index and phi'(G) = G' is finite");
  if (report.classification.kind == GroupKind::NonDedekind)
    report.notes.push_back("the cyclic subgroup generated by " + group.name(*report.classification.witness) +
                           " is not normal; no S_4 prediction applies");
  if (!dedekind && !report.all_averaging_central())
    report.notes.push_back("averaging idempotents over non-normal cyclic subgroups are not central");
  if (report.idempotent_violation)
    report.notes.push_back("VIOLATION: K[G] is semiprime but has a noncentral idempotent");
  if (report.s4_violation) report.notes.push_back("VIOLATION: G is Dedekind but S_4 fails on K[G]");
  return report;
}

namespace {

std::string yes_no(bool b) { return b ? "yes" : "no"; }

}  // namespace

std::string render_text(const HartleyReport& r) {
  std::ostringstream out;
  out << "group: " << r.group_spec << " (order " << r.group_order << ")\n";
  out << "field: " << r.field.to_string() << "\n";
  out << "semiprime: " << yes_no(r.semiprime.semiprime) << " (" << r.semiprime.reason << ")\n";
  out << "phi(G): order " << r.fc_size << ", phi'(G): order " << r.fc_derived_size << "\n";
  out << "averaging idempotents: " << r.averaging_defined() << " defined, "
      << (r.all_averaging_central() ? "all central" : "NOT all central") << "\n";
  for (const auto& c : r.averaging) {
    out << "  " << c.name << " (order " << c.order << "): ";
    if (!c.idempotent)
      out << "skipped, order not invertible\n";
    else
      out << (c.is_idempotent ? "idempotent" : "NOT idempotent") << ", " << (c.central ? "central" : "NOT central")
          << "\n";
  }
  if (r.full_scan.performed)
    out << "all idempotents: " << r.full_scan.idempotents << " found, " << r.full_scan.central << " central\n";
  else
    out << "all idempotents: skipped (" << r.full_scan.skipped_reason << ")\n";
  out << "classification: " << to_string(r.classification.kind) << "\n";
  out << "abelian subgroup of index 2: " << (r.index2_abelian ? "found, order " + std::to_string(r.index2_abelian->size())
                                                               : std::string("none"))
      << "\n";
  out << "S_4: " << describe(r.s4) << "\n";
  if (r.s2) out << "S_2 over " << r.s2_field->to_string() << "[G]: " << describe(*r.s2) << "\n";
  for (const auto& note : r.notes) out << "note: " << note << "\n";
  return out.str();
}

LaurentPolynomial standard_times_inverse(std::size_t n, const Ring& ring) {
  const LaurentPolynomial s = standard_polynomial(2 * n, ring);
  std::vector<Syllable> inv;
  for (std::size_t v = 2 * n; v >= 1; --v) inv.push_back({v, -1});
  return s * LaurentPolynomial::monomial(Scalar::one(ring), GroupWord::from_syllables(inv));
}

namespace {

GroupWord commutator(const GroupWord& u, const GroupWord& v) { return u * v * u.inverse() * v.inverse(); }

}  // namespace

CounterexampleReport counterexample_demo(std::size_t n, const Ring& field, const CheckMode& mode,
                                         const CounterexampleOptions& options) {
  if (n < 2) throw Error(ErrorKind::InvalidArgument, "matrix size must be at least 2");
  if (2 * n > kMaxStandardDegree)
    throw Error(ErrorKind::DegreeTooLarge, "S_" + std::to_string(2 * n) + " exceeds the standard-polynomial limit");
  const Algebra mn = Algebra::matrix(n, field);
  LaurentPolynomial p = standard_times_inverse(n, field);
  AdmissibilityReport admissibility = diagnose_admissibility(p);
  std::size_t zero_sum = 0;
  for (const auto& d : admissibility.words)
    if (std::all_of(d.exp_sums.begin(), d.exp_sums.end(), [](const auto& kv) { return kv.second == 0; })) ++zero_sum;

  Verdict lpi = check_lpi(mn, p, mode);

  std::string kind = "none";
  std::string message;
  try {
    normalize_exponents(p);
  } catch (const Error& e) {
    kind = to_string(e.kind());
    message = e.what();
  }

  const AlgebraElement a = mn.matrix_unit(2, 1);
  const AlgebraElement b = mn.matrix_unit(1, 2);
  const AlgebraElement ba = b * a;

  CounterexampleReport report{n,
                              field,
                              p,
                              std::move(admissibility),
                              zero_sum,
                              std::move(lpi),
                              kind,
                              message,
                              a,
                              b,
                              ba,
                              is_idempotent(ba),
                              is_nilpotent(ba),
                              options.gi_field,
                              {}};

  const Algebra gi = Algebra::matrix(n, options.gi_field);
  const GroupWord x1 = GroupWord::generator(1);
  const GroupWord x2 = GroupWord::generator(2);
  GroupWord engel = commutator(x1, x2);
  report.gi_scan.push_back({"commutator", engel, check_group_identity(gi, engel, mode)});
  for (long long k = 1; k <= options.max_power; ++k) {
    const GroupWord w = GroupWord::generator(1, k);
    report.gi_scan.push_back({"power " + std::to_string(k), w, check_group_identity(gi, w, mode)});
  }
  for (std::size_t depth = 2; depth <= options.engel_depth; ++depth) {
    engel = commutator(engel, x2);
    report.gi_scan.push_back({"engel " + std::to_string(depth), engel, check_group_identity(gi, engel, mode)});
  }
  return report;
}

std::string render_text(const CounterexampleReport& r) {
  std::ostringstream out;
  out << "P = S_" << 2 * r.n << " * (x1...x" << 2 * r.n << ")^-1 over " << r.field.to_string() << ": "
      << r.p.terms().size() << " words\n";
  out << "admissible: " << yes_no(r.admissibility.admissible) << " (" << r.zero_sum_words << " of "
      << r.admissibility.words.size() << " words have zero exponent sum in every variable, "
      << r.admissibility.offenders().size() << " nonconstant offenders)\n";
  out << "LPI on M_" << r.n << "(" << r.field.to_string() << "): " << describe(r.lpi) << "\n";
  out << "normalize_exponents: " << r.normalize_error_kind;
  if (!r.normalize_error.empty()) out << " (" << r.normalize_error << ")";
  out << "\n";
  out << "a = e21 = " << r.a.to_string() << ", b = e12 = " << r.b.to_string() << ", ba = " << r.ba.to_string()
      << ": idempotent " << yes_no(r.ba_idempotent) << ", nilpotent " << yes_no(r.ba_nilpotent) << "\n";
  out << "group identity scan on GL_" << r.n << "(" << r.gi_field.to_string() << "):\n";
  for (const auto& probe : r.gi_scan)
    out << "  " << probe.label << " (" << probe.word.to_string() << "): " << describe(probe.verdict) << "\n";
  return out.str();
}

}  // namespace lpi
