#include "lpi_cli/cli.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "lpi/construction.hpp"
#include "lpi/error.hpp"
#include "lpi/hartley.hpp"
#include "lpi/identity_engine.hpp"
#include "lpi/json_report.hpp"
#include "lpi/words.hpp"

namespace lpi::cli {

namespace {

using nlohmann::json;

struct Config {
  std::string algebra;
  std::string ring = "q";
  std::string group;
  std::string poly;
  std::string word;
  std::string ideal;
  std::string gi_field = "gf5";
  std::size_t n = 2;
  long long max_power = 10;
  std::uint64_t samples = 20;

  bool exhaustive = false;
  std::uint64_t trials = 1000;
  std::uint64_t seed = 0;
  std::uint64_t budget = kDefaultBudget;
  std::size_t max_order = kDefaultMaxGroupOrder;
  long height = 5;
  std::size_t jobs = 1;
  bool json = false;
  bool timing = false;
};

// Collected output of one subcommand.
struct Outcome {
  json inputs = json::object();
  std::vector<std::pair<std::string, Verdict>> verdicts;
  json construction = nullptr;
  json report = nullptr;
  std::string text;
  bool failed = false;
};

CheckMode make_mode(const Config& cfg) {
  CheckMode mode = cfg.exhaustive ? CheckMode::exhaustive(cfg.budget) : CheckMode::random(cfg.trials, cfg.seed);
  mode.seed = cfg.seed;
  mode.budget = cfg.budget;
  mode.jobs = cfg.jobs;
  mode.sampling.height = cfg.height;
  return mode;
}

json mode_json(const Config& cfg) {
  json m{{"kind", cfg.exhaustive ? "exhaustive" : "random"}, {"budget", cfg.budget}, {"jobs", cfg.jobs}};
  if (!cfg.exhaustive) {
    m["trials"] = cfg.trials;
    m["height"] = cfg.height;
  }
  return m;
}

std::string mode_text(const Config& cfg) {
  if (cfg.exhaustive) return "exhaustive (budget " + std::to_string(cfg.budget) + "), seed " + std::to_string(cfg.seed);
  return "random, " + std::to_string(cfg.trials) + " trials, seed " + std::to_string(cfg.seed);
}

void add_verdict(Outcome& o, const std::string& name, Verdict v) {
  o.text += name + ": " + describe(v) + "\n";
  if (!v.holds()) o.failed = true;
  o.verdicts.emplace_back(name, std::move(v));
}

GroupWord parse_word(const std::string& text) {
  const LaurentPolynomial p = parse_poly(text, Ring::rationals());
  if (p.terms().size() != 1 || !p.terms().begin()->second.is_one())
    throw Error(ErrorKind::InvalidArgument, "'" + text + "' is not a single group word");
  return p.terms().begin()->first;
}

std::vector<AlgebraElement> parse_elements(const Algebra& algebra, const std::string& text) {
  std::vector<AlgebraElement> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ';'))
    if (item.find_first_not_of(" \t") != std::string::npos) out.push_back(parse_element(algebra, item));
  return out;
}

std::string construction_text(const ConstructionReport& r) {
  std::ostringstream out;
  out << "input: " << r.input.to_string() << " over " << r.input.ring().to_string() << "\n";
  if (r.normalized.reduced) out << "two-variable form: applied\n";
  out << "normalization: ";
  if (r.normalized.normalization)
    out << "x" << r.normalized.normalization->variable << " -> x" << r.normalized.normalization->variable << "^"
        << r.normalized.normalization->k << "\n";
  else
    out << "none\n";
  out << "normalized: " << r.normalized.poly.to_string() << "\n";
  out << "a1 = " << r.a1.to_string() << ", l = " << r.l << ", r = " << r.r << "\n";
  out << "f0(s) = " << r.f0.to_string() << "\n";
  out << "f1(s) = " << r.f1.to_string() << "\n";
  out << "f2(s) = " << r.f2.to_string() << "\n";
  out << "f(s)  = " << r.f.to_string() << "\n";
  out << "deg f2 = " << (r.f2.is_zero() ? std::string("-") : std::to_string(r.f2.degree())) << " (bound "
      << r.f2_bound << "), deg f = d = " << r.d << " (bound " << r.f_bound << ")\n";
  out << "f2 linear coefficient: " << r.f2.coefficient(1).to_string() << "\n";
  for (const auto& w : r.warnings) out << "warning: " << w << "\n";
  return out.str();
}

Outcome cmd_parse(const Config& cfg) {
  Outcome o;
  const Ring ring = Ring::parse(cfg.ring);
  const LaurentPolynomial p = parse_poly(cfg.poly, ring);
  o.inputs = {{"poly", cfg.poly}, {"ring", ring.to_string()}};
  json terms = json::array();
  for (const auto& [w, c] : p.terms())
    terms.push_back({{"word", w.to_string()}, {"coefficient", c.to_string()}, {"total_exp_sum", w.total_exp_sum()}});
  o.report = {{"canonical", p.to_string()}, {"terms", std::move(terms)}, {"admissibility", to_json(diagnose_admissibility(p))}};
  o.text = p.to_string() + "\n";
  return o;
}

Outcome cmd_check_lpi(const Config& cfg) {
  Outcome o;
  const Algebra a = Algebra::parse(cfg.algebra, cfg.max_order);
  const LaurentPolynomial p = parse_poly(cfg.poly, a.ring());
  o.inputs = {{"algebra", a.to_string()}, {"poly", p.to_string()}, {"mode", mode_json(cfg)}};
  o.text = "algebra: " + a.to_string() + "\npolynomial: " + p.to_string() + "\nmode: " + mode_text(cfg) + "\n";
  add_verdict(o, "lpi", check_lpi(a, p, make_mode(cfg)));
  return o;
}

Outcome cmd_check_pi(const Config& cfg) {
  Outcome o;
  const Algebra a = Algebra::parse(cfg.algebra, cfg.max_order);
  const LaurentPolynomial p = parse_poly(cfg.poly, a.ring());
  std::optional<std::vector<AlgebraElement>> ideal;
  if (!cfg.ideal.empty()) ideal = parse_elements(a, cfg.ideal);
  o.inputs = {{"algebra", a.to_string()}, {"poly", p.to_string()}, {"mode", mode_json(cfg)}};
  if (ideal) o.inputs["ideal"] = cfg.ideal;
  o.text = "algebra: " + a.to_string() + "\npolynomial: " + p.to_string() + "\n";
  if (ideal) o.text += "right ideal generated by: " + cfg.ideal + "\n";
  o.text += "mode: " + mode_text(cfg) + "\n";
  add_verdict(o, "pi", check_pi(a, p, make_mode(cfg), ideal));
  return o;
}

Outcome cmd_standard(const Config& cfg) {
  Outcome o;
  const Algebra a = Algebra::parse(cfg.algebra, cfg.max_order);
  o.inputs = {{"algebra", a.to_string()}, {"n", cfg.n}, {"mode", mode_json(cfg)}};
  o.text = "algebra: " + a.to_string() + "\nS_" + std::to_string(cfg.n) + "\nmode: " + mode_text(cfg) + "\n";
  add_verdict(o, "standard", check_standard(a, cfg.n, make_mode(cfg)));
  return o;
}

Outcome cmd_check_gi(const Config& cfg) {
  Outcome o;
  const Algebra a = Algebra::parse(cfg.algebra, cfg.max_order);
  const GroupWord w = parse_word(cfg.word);
  o.inputs = {{"algebra", a.to_string()}, {"word", w.to_string()}, {"mode", mode_json(cfg)}};
  o.text = "algebra: " + a.to_string() + "\nword: " + w.to_string() + "\nmode: " + mode_text(cfg) + "\n";
  add_verdict(o, "group_identity", check_group_identity(a, w, make_mode(cfg)));
  return o;
}

Outcome cmd_derive(const Config& cfg) {
  Outcome o;
  const Ring ring = Ring::parse(cfg.ring);
  const LaurentPolynomial p = parse_poly(cfg.poly, ring);
  o.inputs = {{"poly", p.to_string()}, {"ring", ring.to_string()}};
  const ConstructionReport r = derive(p);
  o.construction = to_json(r);
  o.text = construction_text(r);
  return o;
}

Outcome cmd_verify_theorem1(const Config& cfg) {
  Outcome o;
  const Algebra a = Algebra::parse(cfg.algebra, cfg.max_order);
  const LaurentPolynomial p = parse_poly(cfg.poly, a.ring());
  o.inputs = {{"algebra", a.to_string()}, {"poly", p.to_string()}, {"mode", mode_json(cfg)}};
  const Theorem1Report r = verify_theorem1(a, p, make_mode(cfg));
  o.construction = to_json(r.construction);
  o.text = construction_text(r.construction) + "algebra: " + a.to_string() + "\nmode: " + mode_text(cfg) + "\n";
  add_verdict(o, "premise", r.premise);
  const std::string suffix = r.vacuous ? " [vacuous: premise fails]" : "";
  o.text += "f2 layer" + suffix + ": " + describe(r.f2_layer) + "\n";
  o.text += "f layer" + suffix + ": " + describe(r.f_layer) + "\n";
  if (!r.f2_layer.holds() || !r.f_layer.holds()) o.failed = true;
  o.verdicts.emplace_back("f2_layer", r.f2_layer);
  o.verdicts.emplace_back("f_layer", r.f_layer);
  o.report = {{"vacuous", r.vacuous}};
  return o;
}

Outcome cmd_nilpotency(const Config& cfg) {
  Outcome o;
  const Algebra a = Algebra::parse(cfg.algebra, cfg.max_order);
  const LaurentPolynomial p = parse_poly(cfg.poly, a.ring());
  o.inputs = {{"algebra", a.to_string()}, {"poly", p.to_string()}, {"samples", cfg.samples}, {"mode", mode_json(cfg)}};
  const ConstructionReport r = derive(p);
  o.construction = to_json(r);
  o.text = "algebra: " + a.to_string() + "\npolynomial: " + p.to_string() + "\nd = " + std::to_string(r.d) +
           "\nmode: " + mode_text(cfg) + "\n";

  json vandermonde = json::object();
  const bool field_ok = a.ring().is_field() &&
                        (!a.ring().is_finite() || a.ring().modulus() - 1 > static_cast<std::uint64_t>(r.d));
  if (!field_ok) {
    vandermonde = {{"skipped", "the scalar field needs more than d = " + std::to_string(r.d) + " nonzero elements"}};
    o.text += "vandermonde: skipped (field has at most d nonzero elements)\n";
  } else {
    json samples = json::array();
    std::uint64_t inconsistent = 0;
    std::uint64_t power_nonzero = 0;
    for (std::uint64_t i = 0; i < cfg.samples; ++i) {
      Rng rng = trial_rng(cfg.seed, i);
      SamplingOptions sampling;
      sampling.height = cfg.height;
      const AlgebraElement x = random_square_zero(a, rng, sampling);
      auto [b, c] = random_zero_product_pair(a, rng, sampling);
      const AlgebraElement u = random_element(a, rng, sampling);
      const VandermondeResult v = vandermonde_extract(r.f, x, b, c, u);
      if (v.inconsistent) ++inconsistent;
      if (!v.power_zero) ++power_nonzero;
      json item = to_json(v);
      item["a"] = x.to_string();
      item["b"] = b.to_string();
      item["c"] = c.to_string();
      item["u"] = u.to_string();
      samples.push_back(std::move(item));
    }
    vandermonde = {{"samples", std::move(samples)}, {"inconsistent", inconsistent}, {"power_nonzero", power_nonzero}};
    o.text += "vandermonde: " + std::to_string(cfg.samples) + " samples, " + std::to_string(inconsistent) +
              " with a nonzero component, " + std::to_string(power_nonzero) + " with (bacu)^d != 0\n";
    if (inconsistent || power_nonzero) o.failed = true;
  }

  const C2Report c2 = corollary_c2_check(a, r.d, make_mode(cfg));
  o.text += "(ab)^" + std::to_string(c2.bound) + " = 0 over square-zero pairs: " + describe(c2.verdict) + "\n";
  o.text += "  pairs " + std::to_string(c2.pairs) + ", max nilpotency index of ab " +
            (c2.max_index ? std::to_string(*c2.max_index) : std::string("-")) + ", field larger than 2d: " +
            (c2.large_field ? "yes" : "no") + ", pairs outside both cases " + std::to_string(c2.neither_case) + "\n";
  if (!c2.verdict.holds()) o.failed = true;
  o.verdicts.emplace_back("corollary_c2", c2.verdict);
  o.report = {{"vandermonde", std::move(vandermonde)}, {"c2", to_json(c2)}};
  return o;
}

Outcome cmd_hartley(const Config& cfg) {
  Outcome o;
  const FiniteGroup g = build_group(cfg.group, cfg.max_order);
  const Ring field = Ring::parse(cfg.ring);
  o.inputs = {{"group", cfg.group}, {"field", field.to_string()}, {"mode", mode_json(cfg)}};
  const HartleyReport r = analyze(g, cfg.group, field, make_mode(cfg));
  o.report = to_json(r);
  o.text = render_text(r);
  o.verdicts.emplace_back("s4", r.s4);
  if (r.s2) o.verdicts.emplace_back("s2", *r.s2);
  o.failed = r.idempotent_violation || r.s4_violation;
  return o;
}

Outcome cmd_counterexample(const Config& cfg) {
  Outcome o;
  const Ring field = Ring::parse(cfg.ring);
  CounterexampleOptions options;
  options.gi_field = Ring::parse(cfg.gi_field);
  options.max_power = cfg.max_power;
  o.inputs = {{"n", cfg.n},
              {"field", field.to_string()},
              {"gi_field", options.gi_field.to_string()},
              {"max_power", cfg.max_power},
              {"mode", mode_json(cfg)}};
  const CounterexampleReport r = counterexample_demo(cfg.n, field, make_mode(cfg), options);
  o.report = to_json(r);
  o.text = render_text(r);
  o.verdicts.emplace_back("lpi", r.lpi);
  for (const auto& probe : r.gi_scan) o.verdicts.emplace_back("gi " + probe.label, probe.verdict);
  o.failed = !r.lpi.holds();
  return o;
}

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::SyntaxError:
    case ErrorKind::SpecSyntaxError:
    case ErrorKind::ZeroPolynomial:
    case ErrorKind::InvalidTable:
    case ErrorKind::InvalidArgument:
    case ErrorKind::RingMismatch:
    case ErrorKind::DescriptorMismatch:
      return kUsage;
    default:
      return kEngine;
  }
}

void add_mode_options(CLI::App* sub, Config& cfg, bool randomized = true) {
  if (randomized) {
    auto* ex = sub->add_flag("--exhaustive", cfg.exhaustive, "Quantify over every tuple");
    auto* tr = sub->add_option("--trials", cfg.trials, "Random trials")->check(CLI::PositiveNumber);
    ex->excludes(tr);
    sub->add_option("--seed", cfg.seed, "Random seed")->capture_default_str();
    sub->add_option("--budget", cfg.budget, "Maximum number of evaluations")->capture_default_str();
    sub->add_option("--height", cfg.height, "Bound on rational numerators and denominators")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    sub->add_option("--jobs", cfg.jobs, "Worker threads")->check(CLI::PositiveNumber)->capture_default_str();
  }
  sub->add_option("--max-order", cfg.max_order, "Largest group order accepted")->capture_default_str();
  sub->add_flag("--json", cfg.json, "JSON output");
  sub->add_flag("--timing", cfg.timing, "Report elapsed time");
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Config cfg;
  CLI::App app{"Laurent polynomial identities on concrete algebras", "lpi"};
  app.require_subcommand(1);

  std::function<Outcome(const Config&)> handler;
  std::string name;
  auto sub = [&](const std::string& n, const std::string& desc, std::function<Outcome(const Config&)> fn) {
    CLI::App* s = app.add_subcommand(n, desc);
    s->callback([&, n, fn] {
      name = n;
      handler = fn;
    });
    return s;
  };

  auto* parse = sub("parse", "Print the canonical form of a polynomial", cmd_parse);
  parse->add_option("--poly", cfg.poly, "Polynomial")->required();
  parse->add_option("--ring", cfg.ring, "Coefficient ring (q, z, gf<p>)")->capture_default_str();
  add_mode_options(parse, cfg, false);

  auto* lpi = sub("check-lpi", "Check a Laurent identity on the unit group", cmd_check_lpi);
  lpi->add_option("--algebra", cfg.algebra, "matrix:n:R, tri:n:R or grpalg:G:R")->required();
  lpi->add_option("--poly", cfg.poly, "Polynomial")->required();
  add_mode_options(lpi, cfg);

  auto* pi = sub("check-pi", "Check a polynomial identity on all elements", cmd_check_pi);
  pi->add_option("--algebra", cfg.algebra, "Algebra spec")->required();
  pi->add_option("--poly", cfg.poly, "Polynomial without negative exponents")->required();
  pi->add_option("--ideal", cfg.ideal, "Right ideal generators separated by ';'");
  add_mode_options(pi, cfg);

  auto* standard = sub("standard", "Check the standard polynomial S_n", cmd_standard);
  standard->add_option("--n", cfg.n, "Degree")->required();
  standard->add_option("--algebra", cfg.algebra, "Algebra spec")->required();
  add_mode_options(standard, cfg);

  auto* gi = sub("check-gi", "Check a group identity on the unit group", cmd_check_gi);
  gi->add_option("--algebra", cfg.algebra, "Algebra spec")->required();
  gi->add_option("--word", cfg.word, "Group word such as x1*x2*x1^-1*x2^-1")->required();
  add_mode_options(gi, cfg);

  auto* der = sub("derive", "Derive f0, f2 and f", cmd_derive);
  der->add_option("--poly", cfg.poly, "Polynomial")->required();
  der->add_option("--ring", cfg.ring, "Coefficient ring")->capture_default_str();
  add_mode_options(der, cfg, false);

  auto* thm = sub("verify-theorem1", "Derive and verify f2(abau) = 0 and f(bacu) = 0", cmd_verify_theorem1);
  thm->add_option("--algebra", cfg.algebra, "Algebra spec")->required();
  thm->add_option("--poly", cfg.poly, "Polynomial")->required();
  add_mode_options(thm, cfg);

  auto* nil = sub("nilpotency", "Vandermonde extraction and the (ab)^(2d) bound", cmd_nilpotency);
  nil->add_option("--algebra", cfg.algebra, "Algebra spec")->required();
  nil->add_option("--poly", cfg.poly, "Polynomial")->required();
  nil->add_option("--samples", cfg.samples, "Random (a, b, c, u) samples for extraction")->capture_default_str();
  add_mode_options(nil, cfg);

  auto* hart = sub("hartley", "Group-algebra analysis", cmd_hartley);
  hart->add_option("--group", cfg.group, "Group spec (c<n>, d<n>, s<n>, q8, products with '*', file:<path>)")
      ->required();
  hart->add_option("--field", cfg.ring, "Field (q or gf<p>)")->required();
  add_mode_options(hart, cfg);

  auto* cex = sub("counterexample", "S_2n * (x1...x2n)^-1 on n x n matrices", cmd_counterexample);
  cex->add_option("--n", cfg.n, "Matrix size")->capture_default_str();
  cex->add_option("--field", cfg.ring, "Field")->required();
  cex->add_option("--gi-field", cfg.gi_field, "Field for the group identity scan")->capture_default_str();
  cex->add_option("--max-power", cfg.max_power, "Largest k for the x^k probes")->capture_default_str();
  add_mode_options(cex, cfg);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }
  if (name == "hartley" && hart->count("--trials") == 0) cfg.trials = 10000;

  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = handler(cfg);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    if (e.kind() == ErrorKind::SyntaxError && e.position() != Error::npos && !cfg.poly.empty() &&
        e.position() <= cfg.poly.size())
      err << "  " << cfg.poly << "\n  " << std::string(e.position(), ' ') << "^\n";
    return exit_code_for(e.kind());
  }
  const auto elapsed =
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();

  std::uint64_t evaluations = 0;
  for (const auto& [n, v] : o.verdicts) evaluations += v.evaluations;

  if (cfg.json) {
    json verdicts = json::array();
    json witnesses = json::array();
    for (const auto& [n, v] : o.verdicts) {
      json item = to_json(v);
      item["name"] = n;
      verdicts.push_back(item);
      if (!v.holds()) witnesses.push_back({{"verdict", n}, {"assignment", item["witness"]}, {"value", item["value"]}});
    }
    json stats{{"evaluations", evaluations}};
    if (cfg.timing) stats["elapsed_ms"] = elapsed;
    json doc{{"command", name},
             {"inputs", o.inputs},
             {"seed", cfg.seed},
             {"verdicts", std::move(verdicts)},
             {"construction", o.construction},
             {"witnesses", std::move(witnesses)},
             {"stats", std::move(stats)},
             {"report", o.report},
             {"exit_code", o.failed ? kFails : kOk}};
    out << doc.dump(2) << "\n";
  } else {
    out << o.text;
    if (name != "parse" && name != "derive") out << "seed: " << cfg.seed << "\n";
    if (cfg.timing) out << "elapsed: " << elapsed << " ms\n";
  }
  return o.failed ? kFails : kOk;
}

}  // namespace lpi::cli
