#include "lpi/json_report.hpp"

namespace lpi {

using nlohmann::json;

json to_json(const Verdict& v) {
  json out{{"status", to_string(v.status)},
           {"exhaustive", v.exhaustive},
           {"evaluations", v.evaluations},
           {"seed", v.seed},
           {"trials", v.trials}};
  out["witness_index"] = v.witness_index ? json(*v.witness_index) : json(nullptr);
  json witness = json::array();
  for (const auto& w : v.witness) witness.push_back({{"name", w.name}, {"value", w.value.to_string()}});
  out["witness"] = std::move(witness);
  out["value"] = v.value ? json(v.value->to_string()) : json(nullptr);
  return out;
}

json to_json(const UnivariatePoly& poly) {
  json out = json::array();
  for (const auto& [e, c] : poly.coefficients()) out.push_back({{"exponent", e}, {"coefficient", c.to_string()}});
  return out;
}

json to_json(const AdmissibilityReport& report) {
  json words = json::array();
  for (const auto& d : report.words) {
    json sums = json::object();
    for (const auto& [v, s] : d.exp_sums) sums["x" + std::to_string(v)] = s;
    words.push_back({{"word", d.word.to_string()},
                     {"coefficient", d.coefficient.to_string()},
                     {"exp_sums", std::move(sums)},
                     {"total_exp_sum", d.total_exp_sum},
                     {"constant", d.constant},
                     {"offending", d.offending}});
  }
  return {{"admissible", report.admissible}, {"offenders", report.offenders().size()}, {"words", std::move(words)}};
}

json to_json(const ConstructionReport& r) {
  json out{{"input", r.input.to_string()},
           {"ring", r.input.ring().to_string()},
           {"reduced_to_two_variables", r.normalized.reduced},
           {"normalized", r.normalized.poly.to_string()}};
  out["k"] = r.normalized.normalization ? json(r.normalized.normalization->k) : json(nullptr);
  out["a1"] = r.a1.to_string();
  out["l"] = r.l;
  out["r"] = r.r;
  out["r_effective"] = r.r_effective;
  out["f0"] = to_json(r.f0);
  out["f1"] = to_json(r.f1);
  out["f2"] = to_json(r.f2);
  out["f"] = to_json(r.f);
  out["deg_f2"] = r.f2.is_zero() ? json(nullptr) : json(r.f2.degree());
  out["deg_f2_bound"] = r.f2_bound;
  out["d"] = r.d;
  out["deg_f_bound"] = r.f_bound;
  out["f2_linear_coefficient"] = r.f2.coefficient(1).to_string();
  out["warnings"] = r.warnings;
  return out;
}

json to_json(const Theorem1Report& r) {
  return {{"construction", to_json(r.construction)},
          {"premise", to_json(r.premise)},
          {"f2_layer", to_json(r.f2_layer)},
          {"f_layer", to_json(r.f_layer)},
          {"vacuous", r.vacuous}};
}

json to_json(const VandermondeResult& r) {
  json points = json::array();
  for (const auto& p : r.points) points.push_back(p.to_string());
  json comps = json::array();
  for (const auto& c : r.components) comps.push_back(c.to_string());
  json out{{"s", r.s.to_string()}, {"d", r.d},           {"points", std::move(points)},
           {"components", std::move(comps)}, {"all_zero", r.all_zero}, {"power_zero", r.power_zero},
           {"inconsistent", r.inconsistent}};
  out["offending"] = r.offending ? json(*r.offending) : json(nullptr);
  return out;
}

json to_json(const C2Report& r) {
  json out{{"verdict", to_json(r.verdict)}, {"d", r.d},
           {"bound", r.bound},              {"large_field", r.large_field},
           {"pairs", r.pairs},              {"neither_case", r.neither_case}};
  out["max_index"] = r.max_index ? json(*r.max_index) : json(nullptr);
  out["neither_example"] = r.neither_example ? json{{"a", r.neither_example->first.to_string()},
                                                    {"b", r.neither_example->second.to_string()}}
                                             : json(nullptr);
  return out;
}

json to_json(const HartleyReport& r) {
  json averaging = json::array();
  for (const auto& c : r.averaging) {
    json item{{"element", c.name}, {"order", c.order}, {"defined", c.idempotent.has_value()}};
    if (c.idempotent) {
      item["value"] = c.idempotent->to_string();
      item["idempotent"] = c.is_idempotent;
      item["central"] = c.central;
    }
    averaging.push_back(std::move(item));
  }
  json scan{{"performed", r.full_scan.performed}};
  if (r.full_scan.performed) {
    scan["idempotents"] = r.full_scan.idempotents;
    scan["central"] = r.full_scan.central;
  } else {
    scan["skipped_reason"] = r.full_scan.skipped_reason;
  }
  json out{{"group", r.group_spec},
           {"order", r.group_order},
           {"field", r.field.to_string()},
           {"semiprime", {{"value", r.semiprime.semiprime}, {"reason", r.semiprime.reason}}},
           {"phi_order", r.fc_size},
           {"phi_derived_order", r.fc_derived_size},
           {"averaging_idempotents", std::move(averaging)},
           {"all_averaging_central", r.all_averaging_central()},
           {"idempotent_scan", std::move(scan)},
           {"classification", to_string(r.classification.kind)},
           {"s4", to_json(r.s4)},
           {"idempotent_violation", r.idempotent_violation},
           {"s4_violation", r.s4_violation},
           {"notes", r.notes}};
  out["index2_abelian_subgroup"] = r.index2_abelian ? json(*r.index2_abelian) : json(nullptr);
  out["s2"] = r.s2 ? to_json(*r.s2) : json(nullptr);
  out["s2_field"] = r.s2_field ? json(r.s2_field->to_string()) : json(nullptr);
  return out;
}

json to_json(const CounterexampleReport& r) {
  json scan = json::array();
  for (const auto& probe : r.gi_scan)
    scan.push_back({{"label", probe.label}, {"word", probe.word.to_string()}, {"verdict", to_json(probe.verdict)}});
  return {{"n", r.n},
          {"field", r.field.to_string()},
          {"polynomial", r.p.to_string()},
          {"words", r.p.terms().size()},
          {"zero_sum_words", r.zero_sum_words},
          {"admissibility", to_json(r.admissibility)},
          {"lpi", to_json(r.lpi)},
          {"normalize", {{"error", r.normalize_error_kind}, {"message", r.normalize_error}}},
          {"a", r.a.to_string()},
          {"b", r.b.to_string()},
          {"ba", r.ba.to_string()},
          {"ba_idempotent", r.ba_idempotent},
          {"ba_nilpotent", r.ba_nilpotent},
          {"gi_field", r.gi_field.to_string()},
          {"gi_scan", std::move(scan)}};
}

}  // namespace lpi
