#include "tiltwall/json_io.hpp"

#include "tiltwall/error.hpp"

namespace tiltwall::jio {

json rational_json(const Rational& q) {
    return q.str();
}

Rational rational_from(const json& j) {
    if (!j.is_string()) throw Error(Errc::parse_error, "rational must be a string like \"p/q\"");
    auto q = Rational::parse(j.get<std::string>());
    if (!q) throw Error(Errc::parse_error, "malformed rational \"" + j.get<std::string>() + "\"");
    return *q;
}

json numclass_json(const NumClass& v) {
    return {{"r", rational_json(v.r)},
            {"c", rational_json(v.c)},
            {"d2", rational_json(v.d2)},
            {"d3", rational_json(v.d3)}};
}

NumClass numclass_from(const json& j) {
    if (!j.is_object()) throw Error(Errc::parse_error, "class must be a JSON object");
    for (const char* key : {"r", "c", "d2", "d3"})
        if (!j.contains(key))
            throw Error(Errc::parse_error, std::string("class is missing field \"") + key + "\"");
    return {rational_from(j.at("r")), rational_from(j.at("c")), rational_from(j.at("d2")),
            rational_from(j.at("d3"))};
}

json model_json(const VarietyModel& m) {
    return {{"name", m.name}, {"d", m.d}, {"lam2", m.lam2}, {"lam3", m.lam3}};
}

VarietyModel model_from(const json& j) {
    if (!j.is_object() || !j.contains("d") || !j.contains("lam2") || !j.contains("lam3"))
        throw Error(Errc::parse_error, "model needs fields d, lam2, lam3");
    return VarietyModel::custom(j.value("name", std::string("custom")), j.at("d").get<long>(),
                                j.at("lam2").get<long>(), j.at("lam3").get<long>());
}

json complex_json(const ComplexQ& z) {
    return {{"re", rational_json(z.re)}, {"im", rational_json(z.im)}};
}

ComplexQ complex_from(const json& j) {
    if (!j.is_object() || !j.contains("re") || !j.contains("im"))
        throw Error(Errc::parse_error, "complex value needs fields re, im");
    return {rational_from(j.at("re")), rational_from(j.at("im"))};
}

json slope_json(const SlopeValue& s) {
    if (s.is_infinite()) return {{"infinite", true}};
    return {{"finite", rational_json(s.value())}};
}

SlopeValue slope_from(const json& j) {
    if (j.is_object() && j.contains("infinite") && j.at("infinite").get<bool>())
        return SlopeValue::infinity();
    if (j.is_object() && j.contains("finite"))
        return SlopeValue::finite(rational_from(j.at("finite")));
    throw Error(Errc::parse_error, "slope needs \"finite\" or \"infinite\"");
}

json polycharge_json(const PolyCharge& p) {
    json coeffs = json::array();
    for (const auto& c : p.coeffs) coeffs.push_back(complex_json(c));
    return {{"coeffs", coeffs}};
}

PolyCharge polycharge_from(const json& j) {
    if (!j.is_object() || !j.contains("coeffs") || !j.at("coeffs").is_array() ||
        j.at("coeffs").size() != 4)
        throw Error(Errc::parse_error, "polynomial charge needs a 4-entry coeffs array");
    PolyCharge p;
    for (size_t k = 0; k < 4; ++k) p.coeffs[k] = complex_from(j.at("coeffs").at(k));
    return p;
}

json discriminants_json(const DiscriminantReport& rep) {
    return {{"delta", rational_json(rep.delta)},
            {"delta_bar", rational_json(rep.delta_bar)},
            {"d1", rational_json(rep.d1)},
            {"d2h", rational_json(rep.d2h)},
            {"d3h", rational_json(rep.d3h)}};
}

json verdict_json(bool holds, const Rational& margin) {
    return {{"holds", holds}, {"margin", rational_json(margin)}};
}

json conic_json(const WallConic& wc) {
    return {{"u0", rational_json(wc.u0)},
            {"u1", rational_json(wc.u1)},
            {"q0", rational_json(wc.q0)},
            {"q1", rational_json(wc.q1)},
            {"q2", rational_json(wc.q2)}};
}

WallConic conic_from(const json& j) {
    if (!j.is_object())
        throw Error(Errc::parse_error, "conic must be a JSON object");
    for (const char* key : {"u0", "u1", "q0", "q1", "q2"})
        if (!j.contains(key))
            throw Error(Errc::parse_error, std::string("conic is missing field \"") + key + "\"");
    return {rational_from(j.at("u0")), rational_from(j.at("u1")), rational_from(j.at("q0")),
            rational_from(j.at("q1")), rational_from(j.at("q2"))};
}

json wall_list_json(const std::vector<PseudoWall>& walls) {
    json arr = json::array();
    for (const auto& pw : walls) {
        arr.push_back({{"w",
                        {{"r", rational_json(pw.r)},
                         {"c", rational_json(pw.c)},
                         {"d2", rational_json(pw.d2)}}},
                       {"conic", conic_json(pw.conic)}});
    }
    return arr;
}

json divisor_check_json(const DivisorCheck& chk, const DivisorScenario& sc) {
    return {{"holds", chk.holds},
            {"active_case", chk.active_case == DivisorCheck::Case::Bog1 ? "Bog1" : "Bog2"},
            {"margin", rational_json(chk.margin)},
            {"bog1_bound", rational_json(bog1_bound(sc))},
            {"bog2_bound", rational_json(bog2_bound(sc))},
            {"pushforward", numclass_json(chk.pushforward)}};
}

json castelnuovo_json(const std::vector<CastelnuovoRow>& rows) {
    json arr = json::array();
    for (const auto& row : rows) {
        arr.push_back({{"D", row.D},
                       {"d", row.dcurve},
                       {"castelnuovo_bound", rational_json(row.castelnuovo_bound)},
                       {"bg_bound", rational_json(row.bg_bound)},
                       {"t_scale_sq", rational_json(row.t_scale_sq)},
                       {"holds", row.holds}});
    }
    return arr;
}

}  // namespace tiltwall::jio
