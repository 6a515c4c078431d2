#pragma once

#include "tiltwall/model.hpp"
#include "tiltwall/rational.hpp"

namespace tiltwall {

/// Numerical Chern character (r, c H, d2 H^2, d3 H^3) in powers of the ample
/// generator H. Immutable value type; every operation below is pure.
struct NumClass {
    Rational r;   // ch0, the rank
    Rational c;   // ch1 / H
    Rational d2;  // ch2 / H^2
    Rational d3;  // ch3 / H^3

    friend bool operator==(const NumClass& a, const NumClass& b) {
        return a.r == b.r && a.c == b.c && a.d2 == b.d2 && a.d3 == b.d3;
    }
    friend bool operator!=(const NumClass& a, const NumClass& b) { return !(a == b); }

    friend NumClass operator+(const NumClass& a, const NumClass& b) {
        return {a.r + b.r, a.c + b.c, a.d2 + b.d2, a.d3 + b.d3};
    }
    friend NumClass operator-(const NumClass& a, const NumClass& b) {
        return {a.r - b.r, a.c - b.c, a.d2 - b.d2, a.d3 - b.d3};
    }
    NumClass operator-() const { return {-r, -c, -d2, -d3}; }
};

/// Class of O(kH): the exponential (1, k, k^2/2, k^3/6).
NumClass line_bundle(const Rational& k);

/// B-field twist ch -> ch * e^{-beta H}.
NumClass twist(const NumClass& v, const Rational& beta);

/// Class of the shifted derived dual E^vee[1]: signs flip on ch0 and ch2.
NumClass dualize(const NumClass& v);

/// Tensor with O(kH); inverse of twist(., k).
NumClass tensor_line(const NumClass& v, const Rational& k);

/// The four degree pairings against omega = alpha H:
/// (omega^3 ch0, omega^2 ch1, omega ch2, ch3).
struct Degrees {
    Rational q0, q1, q2, q3;
};
Degrees degrees(const NumClass& v, const VarietyModel& model, const Rational& alpha);

/// Integrality of (r, c, lam2*d2, lam3*d3); makes wall enumeration finite.
bool is_lattice_point(const NumClass& v, const VarietyModel& model);

/// Divisor pushforward for a sheaf on S in |mH| with twisted character
/// (r, lambda H^2 under inclusion, s): returns the ambient class
/// (0, rm, -rm^2/2 + lambda, (r m^3 d/6 - m lambda d/2 + s)/d), then twisted
/// by beta for callers working with a nonzero B-field.
NumClass grr_pushforward(const Rational& r, const Rational& lambda, const Rational& s,
                         const Rational& m, const VarietyModel& model, const Rational& beta);

}  // namespace tiltwall
