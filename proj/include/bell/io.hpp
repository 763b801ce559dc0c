#pragma once

#include <json.hpp>

#include <string>

#include "bell/behavior.hpp"
#include "bell/functional.hpp"
#include "bell/monogamy.hpp"

namespace bell {

// Interchange documents. Rationals are "p/q" digit strings (q > 0,
// gcd-reduced on load); all indices are 0-based. Parse errors throw
// DocumentError naming the offending field.

nlohmann::json scenario_to_json(const Scenario& s);
Scenario scenario_from_json(const nlohmann::json& doc);

nlohmann::json functional_to_json(const BellFunctional& f);
BellFunctional functional_from_json(const nlohmann::json& doc);

nlohmann::json behavior_to_json(const Behavior& p);
Behavior behavior_from_json(const nlohmann::json& doc);

nlohmann::json lhv_to_json(const LhvModel& model);

nlohmann::json monogamy_report_to_json(const MonogamyReport& report);

nlohmann::json load_json_file(const std::string& path);
void write_json_file(const std::string& path, const nlohmann::json& doc);

}  // namespace bell
