#include <doctest.h>

#include "test_util.hpp"
#include "tiltwall/error.hpp"
#include "tiltwall/inequalities.hpp"
#include "tiltwall/numclass.hpp"

using namespace tiltwall;
using twtest::NC;
using twtest::Q;

TEST_CASE("line bundle classes") {
    CHECK(line_bundle(0) == NC("1", "0", "0", "0"));
    CHECK(line_bundle(1) == NC("1", "1", "1/2", "1/6"));
    CHECK(line_bundle(-2) == NC("1", "-2", "2", "-4/3"));
}

TEST_CASE("twist") {
    CHECK(twist(line_bundle(1), 1) == line_bundle(0));
    for (const char* bs : {"1/2", "-2/3", "5"}) {
        Rational b = Q(bs);
        CHECK(twist(NC("1", "0", "0", "0"), b) ==
              NumClass{1, -b, b * b / 2, -b * b * b / 6});
    }
    NumClass v = NC("2", "3", "1", "0");
    CHECK(twist(twist(v, Q("1/2")), Q("1/3")) == twist(v, Q("5/6")));
}

TEST_CASE("twist is a group action") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 200; ++i) {
        NumClass v = twtest::rand_class(rng);
        Rational b1 = twtest::rand_rat(rng), b2 = twtest::rand_rat(rng);
        CHECK(twist(twist(v, b1), b2) == twist(v, b1 + b2));
        CHECK(twist(v, 0) == v);
    }
}

TEST_CASE("dualize") {
    CHECK(dualize(line_bundle(1)) == NC("-1", "1", "-1/2", "1/6"));
    NumClass v = NC("2", "1", "-1/2", "1/3");
    CHECK(dualize(dualize(v)) == v);
    CHECK(dualize(NC("0", "0", "1", "0")) == NC("0", "0", "-1", "0"));
}

TEST_CASE("dual and twist are compatible") {
    std::mt19937_64 rng(8);
    for (int i = 0; i < 200; ++i) {
        NumClass v = twtest::rand_class(rng);
        Rational b = twtest::rand_rat(rng);
        CHECK(twist(dualize(v), -b) == dualize(twist(v, b)));
    }
}

TEST_CASE("tensor by a line bundle") {
    CHECK(tensor_line(line_bundle(0), 1) == line_bundle(1));
    NumClass v = NC("2", "-1", "1/3", "0");
    CHECK(tensor_line(v, 0) == v);
    NumClass u = NC("3", "-1", "5/2", "0");
    CHECK(tensor_line(tensor_line(u, 2), -2) == u);
}

TEST_CASE("degree pairings") {
    Degrees d = degrees(line_bundle(1), VarietyModel::p3(), 1);
    CHECK(d.q0 == Q("1"));
    CHECK(d.q1 == Q("1"));
    CHECK(d.q2 == Q("1/2"));
    CHECK(d.q3 == Q("1/6"));

    Degrees q = degrees(line_bundle(1), VarietyModel::quadric(), 1);
    CHECK(q.q0 == Q("2"));
    CHECK(q.q1 == Q("2"));
    CHECK(q.q2 == Q("1"));
    CHECK(q.q3 == Q("1/3"));

    Degrees big = degrees(line_bundle(0), VarietyModel::p3(), 2);
    CHECK(big.q0 == Q("8"));
    CHECK(big.q1 == Q("0"));

    CHECK_THROWS_AS(degrees(line_bundle(0), VarietyModel::p3(), 0), Error);
    CHECK_THROWS_AS(degrees(line_bundle(0), VarietyModel::p3(), -1), Error);
}

TEST_CASE("lattice membership") {
    auto p3 = VarietyModel::p3();
    CHECK(is_lattice_point(line_bundle(1), p3));
    CHECK(!is_lattice_point(NC("1", "1", "1/3", "0"), p3));
    CHECK(is_lattice_point(NC("0", "2", "0", "1/3"), p3));
    CHECK(!is_lattice_point(NC("1/2", "0", "0", "0"), p3));
}

TEST_CASE("pushforward examples") {
    auto p3 = VarietyModel::p3();
    CHECK(grr_pushforward(1, 2, 1, 2, p3, 0) == NC("0", "2", "0", "1/3"));
    CHECK(grr_pushforward(0, 1, 0, 1, p3, 0) == NC("0", "0", "1", "-1/2"));
    // slope-zero normalization lambda = r m^2 / 2 kills the d2 component
    NumClass v = grr_pushforward(1, 2, Q("5"), 2, p3, 0);
    CHECK(v.d2 == Q("0"));
    CHECK(v.d3 == Q("5") - Q("8/12"));
    CHECK_THROWS_AS(grr_pushforward(1, 0, 0, 0, p3, 0), Error);
    CHECK_THROWS_AS(grr_pushforward(1, 0, 0, -1, p3, 0), Error);
}

TEST_CASE("pushforward agrees with the resolution oracle") {
    auto p3 = VarietyModel::p3();
    for (long m = 1; m <= 4; ++m) {
        for (long k = -2; k <= 3; ++k) {
            CAPTURE(m);
            CAPTURE(k);
            // 0 -> O(k - m) -> O(k) -> O_S(k) -> 0 with S in |mH|
            NumClass oracle = line_bundle(k) - line_bundle(k - m);
            Rational rm(m), rk(k);
            CHECK(grr_pushforward(1, rk * rm, rk * rk * rm / 2, rm, p3, 0) == oracle);
        }
    }
}

TEST_CASE("pushforward twist argument matches twisting the output") {
    auto p3 = VarietyModel::p3();
    std::mt19937_64 rng(9);
    for (int i = 0; i < 50; ++i) {
        Rational r = twtest::rand_pos(rng, 4, 2);
        Rational lam = twtest::rand_rat(rng);
        Rational s = twtest::rand_rat(rng);
        Rational m = twtest::rand_pos(rng, 4, 1);
        Rational b = twtest::rand_rat(rng);
        CHECK(grr_pushforward(r, lam, s, m, p3, b) ==
              twist(grr_pushforward(r, lam, s, m, p3, 0), b));
    }
}

TEST_CASE("discriminant precursor is twist invariant") {
    std::mt19937_64 rng(10);
    for (int i = 0; i < 200; ++i) {
        NumClass v = twtest::rand_class(rng);
        Rational b = twtest::rand_rat(rng);
        NumClass w = twist(v, b);
        CHECK(w.c * w.c - 2 * w.r * w.d2 == v.c * v.c - 2 * v.r * v.d2);
    }
}
