#pragma once

#include <json.hpp>

#include "tiltwall/charges.hpp"
#include "tiltwall/inequalities.hpp"
#include "tiltwall/polycharge.hpp"
#include "tiltwall/scenarios.hpp"
#include "tiltwall/slope.hpp"
#include "tiltwall/walls.hpp"

namespace tiltwall::jio {

// ordered_json keeps the documented field order on the wire.
using json = nlohmann::ordered_json;

// Rationals travel as canonical lowest-terms strings, never as numbers.
json rational_json(const Rational& q);
Rational rational_from(const json& j);

json numclass_json(const NumClass& v);
NumClass numclass_from(const json& j);

json model_json(const VarietyModel& m);
VarietyModel model_from(const json& j);

json complex_json(const ComplexQ& z);
ComplexQ complex_from(const json& j);

json slope_json(const SlopeValue& s);
SlopeValue slope_from(const json& j);

json polycharge_json(const PolyCharge& p);
PolyCharge polycharge_from(const json& j);

json discriminants_json(const DiscriminantReport& rep);

json verdict_json(bool holds, const Rational& margin);

json conic_json(const WallConic& wc);
WallConic conic_from(const json& j);

json wall_list_json(const std::vector<PseudoWall>& walls);

json divisor_check_json(const DivisorCheck& chk, const DivisorScenario& sc);
json castelnuovo_json(const std::vector<CastelnuovoRow>& rows);

}  // namespace tiltwall::jio
