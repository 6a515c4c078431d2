#include <doctest.h>

#include "test_util.hpp"
#include "tiltwall/error.hpp"
#include "tiltwall/scenarios.hpp"

using namespace tiltwall;
using twtest::NC;
using twtest::Q;

namespace {
DivisorScenario sc(long r, long m, long d, const char* alpha_sq, const char* s) {
    auto model = d == 1 ? VarietyModel::p3() : VarietyModel::custom("d" + std::to_string(d), d, 2, 6);
    return DivisorScenario::make(Rational(r), m, Q(alpha_sq), Q(s), model);
}
}  // namespace

TEST_CASE("divisor bounds") {
    CHECK(bog1_bound(sc(1, 2, 1, "1", "0")) == Q("1"));
    CHECK(bog1_bound(sc(2, 1, 2, "1", "0")) == Q("1/2"));
    CHECK(bog1_bound(sc(1, 1, 1, "1", "0")) == Q("1/8"));

    CHECK(bog2_bound(sc(1, 2, 1, "1", "0")) == Q("1/3"));
    CHECK(bog2_bound(sc(1, 2, 1, "3", "0")) == Q("1"));
    CHECK(bog2_bound(sc(3, 1, 2, "1", "0")) == Q("1"));
}

TEST_CASE("real-part lower bound") {
    CHECK(rez_lower_bound(sc(1, 2, 1, "1", "1")) == Q("2/3"));
    CHECK(rez_lower_bound(sc(1, 4, 1, "1", "2")) == Q("-2/3"));
    CHECK(rez_lower_bound(sc(1, 2, 1, "4", "1")) == Q("11/3"));
    CHECK_THROWS_AS(rez_lower_bound(sc(1, 1, 1, "1", "1")), Error);
}

TEST_CASE("divisor check case split") {
    auto chk1 = divisor_check(sc(1, 2, 1, "1", "1/3"));
    CHECK(chk1.holds);
    CHECK(chk1.active_case == DivisorCheck::Case::Bog2);
    CHECK(chk1.margin == Q("4/9"));
    CHECK(chk1.pushforward.r == Q("0"));
    CHECK(chk1.pushforward.d2 == Q("0"));

    auto chk2 = divisor_check(sc(1, 1, 1, "1", "1/8"));
    CHECK(chk2.holds);
    CHECK(chk2.active_case == DivisorCheck::Case::Bog1);
    CHECK(chk2.margin == Q("1/72"));

    CHECK_THROWS_AS(divisor_check(sc(1, 2, 1, "1", "2")), Error);
}

TEST_CASE("divisor check equality at the crossover") {
    // 3 m^2 = 4 alpha^2 with s at the common bound forces margin zero
    auto s0 = sc(1, 2, 1, "3", "1");
    CHECK(bog1_bound(s0) == bog2_bound(s0));
    auto chk = divisor_check(s0);
    CHECK(chk.holds);
    CHECK(chk.margin == Q("0"));
}

TEST_CASE("curve scenarios") {
    auto cs = CurveScenario::make(5, 2, 0);
    NumClass v = curve_ideal_class(cs);
    CHECK(v == tensor_line(line_bundle(0) - NC("0", "0", "2/5", "2/5"), 1));

    // genus one drops the ch3 degree by one
    NumClass v1 = curve_ideal_class(CurveScenario::make(5, 2, 1));
    CHECK(v1 == tensor_line(line_bundle(0) - NC("0", "0", "2/5", "1/5"), 1));

    CHECK_THROWS_AS(CurveScenario::make(4, 2, 0), Error);
    CHECK_THROWS_AS(CurveScenario::make(5, 0, 0), Error);
}

TEST_CASE("castelnuovo sweep rows") {
    auto rows = castelnuovo_verify(4, 12);
    bool saw52 = false, saw104 = false, saw41 = false;
    for (const auto& row : rows) {
        CHECK(row.holds);
        if (row.D == 5 && row.dcurve == 2) {
            saw52 = true;
            CHECK(row.castelnuovo_bound == Q("0"));
            CHECK(row.bg_bound == Q("10/3"));
            CHECK(row.t_scale_sq == Q("3/5"));
        }
        if (row.D == 10 && row.dcurve == 4) {
            saw104 = true;
            CHECK(row.castelnuovo_bound == Q("3"));
            CHECK(row.bg_bound == Q("47/3"));
        }
        if (row.D == 4 && row.dcurve == 1) {
            saw41 = true;
            CHECK(row.castelnuovo_bound == Q("0"));
            CHECK(row.bg_bound == Q("5/3"));
        }
    }
    CHECK(saw52);
    CHECK(saw104);
    CHECK(saw41);
}
