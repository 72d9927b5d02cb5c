#pragma once

// JSON serialization of verdicts and reports.

#include <nlohmann/json.hpp>

#include "lpi/construction.hpp"
#include "lpi/hartley.hpp"
#include "lpi/identity_engine.hpp"
#include "lpi/words.hpp"

namespace lpi {

nlohmann::json to_json(const Verdict& verdict);
nlohmann::json to_json(const UnivariatePoly& poly);
nlohmann::json to_json(const AdmissibilityReport& report);
nlohmann::json to_json(const ConstructionReport& report);
nlohmann::json to_json(const Theorem1Report& report);
nlohmann::json to_json(const VandermondeResult& result);
nlohmann::json to_json(const C2Report& report);
nlohmann::json to_json(const HartleyReport& report);
nlohmann::json to_json(const CounterexampleReport& report);

}  // namespace lpi
