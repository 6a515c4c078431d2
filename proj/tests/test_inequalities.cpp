#include <doctest.h>

#include <cmath>

#include "test_util.hpp"
#include "tiltwall/charges.hpp"
#include "tiltwall/error.hpp"
#include "tiltwall/inequalities.hpp"
#include "tiltwall/numclass.hpp"

using namespace tiltwall;
using twtest::NC;
using twtest::Q;

namespace {
const VarietyModel kP3 = VarietyModel::p3();
}

TEST_CASE("discriminant basics") {
    for (long k = -3; k <= 3; ++k) CHECK(delta(line_bundle(k)) == Q("0"));
    CHECK(delta(NC("2", "1", "0", "0")) == Q("1"));
    NumClass v = NC("3", "2", "-1", "0");
    CHECK(delta(twist(v, Q("5/7"))) == delta(v));
}

TEST_CASE("discriminant twist invariance") {
    std::mt19937_64 rng(31);
    for (int i = 0; i < 1000; ++i) {
        NumClass v = twtest::rand_class(rng);
        CHECK(delta(twist(v, twtest::rand_rat(rng))) == delta(v));
    }
}

TEST_CASE("discriminant report") {
    DiscriminantReport a = discriminants(line_bundle(1), 1, 0, kP3);
    CHECK(a.delta == Q("0"));
    CHECK(a.delta_bar == Q("0"));
    CHECK(a.d1 == Q("1"));
    CHECK(a.d2h == Q("0"));
    CHECK(a.d3h == Q("0"));

    DiscriminantReport b = discriminants(NC("2", "1", "0", "0"), 1, 0, kP3);
    CHECK(b.delta == Q("1"));
    CHECK(b.delta_bar == Q("1"));
    CHECK(b.d1 == Q("1"));
    CHECK(b.d2h == Q("1"));
    CHECK(b.d3h == Q("2"));

    DiscriminantReport c = discriminants(NC("0", "1", "0", "0"), 2, 0, kP3);
    CHECK(c.delta == Q("1"));
    CHECK(c.delta_bar == Q("16"));
}

TEST_CASE("rank-1 collapse of the paired discriminant") {
    std::mt19937_64 rng(32);
    const VarietyModel models[] = {kP3, VarietyModel::quadric(), VarietyModel::hypersurface(5)};
    for (int i = 0; i < 1000; ++i) {
        const VarietyModel& model = models[i % 3];
        NumClass v = twtest::rand_class(rng);
        Rational a = twtest::rand_pos(rng);
        Rational b = twtest::rand_rat(rng);
        Rational d(model.d);
        CHECK(discriminants(v, a, b, model).delta_bar == a * a * a * a * d * d * delta(v));
    }
}

TEST_CASE("parameter admissibility") {
    CHECK(valid_ab(Q("-1"), Q("1")));
    CHECK(valid_ab(Q("0"), Q("0")));
    CHECK(!valid_ab(Q("-2"), Q("5")));
    CHECK(!valid_ab(Q("0"), Q("-1")));
}

TEST_CASE("general discriminant bound") {
    auto v1 = check_bg_general(line_bundle(2), 1, 0, Q("-1"), Q("1"), kP3);
    CHECK(v1.holds);
    CHECK(v1.margin == Q("0"));

    auto v2 = check_bg_general(NC("2", "1", "0", "0"), 1, 0, Q("0"), Q("0"), kP3);
    CHECK(v2.holds);
    CHECK(v2.margin == Q("1"));

    auto v3 = check_bg_general(NC("2", "1", "1", "0"), 1, 0, Q("0"), Q("0"), kP3);
    CHECK(!v3.holds);
    CHECK(v3.margin == Q("-3"));

    CHECK_THROWS_AS(check_bg_general(line_bundle(1), 1, 0, Q("-2"), Q("5"), kP3), Error);
    CHECK_THROWS_AS(check_bg_general(line_bundle(1), 0, 0, Q("0"), Q("0"), kP3), Error);
}

TEST_CASE("the two admissible corner choices agree on rank one") {
    std::mt19937_64 rng(33);
    for (int i = 0; i < 500; ++i) {
        NumClass v = twtest::rand_class(rng);
        Rational a = twtest::rand_pos(rng);
        Rational b = twtest::rand_rat(rng);
        auto corner = check_bg_general(v, a, b, Q("-1"), Q("1"), kP3);
        auto simple = check_bg_general(v, a, b, Q("0"), Q("0"), kP3);
        CHECK(corner.margin == simple.margin);
        CHECK(corner.holds == simple.holds);
    }
}

TEST_CASE("strong ch3 bound margin") {
    // pushforward of a rank-1 sheaf on S in |2H| at the extremal s = 1
    NumClass v = grr_pushforward(1, 2, 1, 2, kP3, 0);
    CHECK(v == NC("0", "2", "0", "1/3"));
    CHECK(strong_bg_margin(v, 1, 0, kP3) == Q("-2/9"));
    CHECK(strong_bg_margin_tsq(v, Q("3"), 0, kP3) == Q("0"));

    // twisted line bundle on its slope-zero locus alpha^2 = 3
    CHECK(strong_bg_margin_tsq(line_bundle(1), Q("3"), 0, kP3) == Q("0"));

    CHECK_THROWS_AS(strong_bg_margin(line_bundle(1), 1, 0, kP3), Error);
}

TEST_CASE("coefficient one-half bound margin") {
    CHECK(ch3_half_margin_tsq(line_bundle(1), Q("3"), 0, kP3) == Q("4/3"));
    CHECK(ch3_half_margin(NC("0", "0", "0", "1"), 1, 0, kP3) == Q("-1"));
}

TEST_CASE("strong margin never exceeds the one-half margin at positive degree") {
    std::mt19937_64 rng(34);
    for (int i = 0; i < 300; ++i) {
        Rational tsq = twtest::rand_pos(rng);
        Rational b = twtest::rand_rat(rng);
        Rational r = twtest::rand_rat(rng);
        NumClass w{r, twtest::rand_pos(rng), tsq * r / 6, twtest::rand_rat(rng)};
        NumClass v = twist(w, -b);
        CHECK(strong_bg_margin_tsq(v, tsq, b, kP3) <= ch3_half_margin_tsq(v, tsq, b, kP3));
    }
}

TEST_CASE("margins are invariant under the combined twist") {
    std::mt19937_64 rng(35);
    for (int i = 0; i < 300; ++i) {
        Rational tsq = twtest::rand_pos(rng);
        Rational b = twtest::rand_rat(rng);
        Rational r = twtest::rand_rat(rng);
        NumClass w{r, twtest::rand_rat(rng), tsq * r / 6, twtest::rand_rat(rng)};
        NumClass v = twist(w, -b);
        std::uniform_int_distribution<long> ks(-4, 4);
        Rational k(ks(rng));
        CHECK(strong_bg_margin_tsq(tensor_line(v, k), tsq, b + k, kP3) ==
              strong_bg_margin_tsq(v, tsq, b, kP3));
        CHECK(ch3_half_margin_tsq(tensor_line(v, k), tsq, b + k, kP3) ==
              ch3_half_margin_tsq(v, tsq, b, kP3));

        // the full discriminant report only sees the combined twist, so it is
        // invariant as well
        DiscriminantReport before = discriminants_tsq(v, tsq, b, kP3);
        DiscriminantReport after = discriminants_tsq(tensor_line(v, k), tsq, b + k, kP3);
        CHECK(after.d1 == before.d1);
        CHECK(after.d2h == before.d2h);
        CHECK(after.d3h == before.d3h);
        CHECK(after.delta_bar == before.delta_bar);
    }
}

TEST_CASE("higher discriminant identity") {
    CHECK(higher_discriminant_identity_tsq(line_bundle(1), Q("3"), 0, kP3));
    CHECK(higher_discriminant_identity(NC("2", "3", "1/3", "1/2"), 1, 0, kP3));
    CHECK_THROWS_AS(higher_discriminant_identity(NC("0", "1", "0", "0"), 1, 0, kP3), Error);
    CHECK_THROWS_AS(higher_discriminant_identity(NC("1", "1", "1", "0"), 1, 0, kP3), Error);
}

TEST_CASE("support minimum closed form") {
    CHECK(support_smin(1, kP3) == Q("1/6"));
    CHECK(support_smin(1, VarietyModel::quadric()) == Q("1/3"));
    CHECK(support_smin(2, kP3) == Q("4/3"));
    CHECK_THROWS_AS(support_smin(0, kP3), Error);
}

TEST_CASE("support minimum matches a grid minimizer") {
    for (long alpha : {1L, 2L})
        for (long d : {1L, 2L}) {
            auto model = VarietyModel::custom("m", d, 2, 6);
            double w3 = static_cast<double>(alpha * alpha * alpha * d);
            double best = 1e300;
            const int n = 100000;
            for (int i = 0; i <= n; ++i) {
                double x = -2.0 + 4.0 * i / n;
                double f = -w3 / 6 + 2 * x * x / w3;
                best = std::min(best, std::hypot(x, f));
            }
            double want = support_smin(Rational(alpha), model).to_double();
            CHECK(std::abs(best - want) <= 1e-6 * want);
        }
}
