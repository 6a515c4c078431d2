#pragma once

#include "tiltwall/model.hpp"
#include "tiltwall/numclass.hpp"
#include "tiltwall/slope.hpp"

namespace tiltwall {

/// Exact complex rational; equality is componentwise.
struct ComplexQ {
    Rational re;
    Rational im;

    ComplexQ conj() const { return {re, -im}; }

    friend bool operator==(const ComplexQ& a, const ComplexQ& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const ComplexQ& a, const ComplexQ& b) { return !(a == b); }
    friend ComplexQ operator+(const ComplexQ& a, const ComplexQ& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend ComplexQ operator-(const ComplexQ& a, const ComplexQ& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend ComplexQ operator*(const ComplexQ& a, const ComplexQ& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    ComplexQ operator-() const { return {-re, -im}; }
    bool is_zero() const { return re.is_zero() && im.is_zero(); }
};

/// Central charge at omega = alpha H, B = beta H:
/// (-ch^B_3 + (omega^2/2) ch^B_1) + i (omega ch^B_2 - (omega^3/6) ch^B_0).
ComplexQ z(const NumClass& v, const Rational& alpha, const Rational& beta,
           const VarietyModel& model);

/// Support charge: (1/2) omega^2 ch^B_1 + i Im z.
ComplexQ z_bar(const NumClass& v, const Rational& alpha, const Rational& beta,
               const VarietyModel& model);

/// Two-parameter charge on raw coordinates (degree-one models):
/// (-ch3 + s ch1) + i (ch2 - t rk).
ComplexQ z_st(const NumClass& v, const Rational& s, const Rational& t);

/// Classical slope omega^2 ch^B_1 / ch^B_0; +infinity on rank zero.
SlopeValue mu(const NumClass& v, const Rational& alpha, const Rational& beta,
              const VarietyModel& model);

/// Tilt slope Im z / (omega^2 ch^B_1); +infinity when the twisted ch1
/// vanishes.
SlopeValue nu(const NumClass& v, const Rational& alpha, const Rational& beta,
              const VarietyModel& model);

/// Slope omega ch^B_2 / (omega^2 ch^B_1) for classes of dimension <= 2;
/// +infinity when the twisted ch1 vanishes. Sets *rank_warning (if given)
/// when the input has nonzero rank; the formula is still evaluated.
SlopeValue mu_hat(const NumClass& v, const Rational& alpha, const Rational& beta,
                  const VarietyModel& model, bool* rank_warning = nullptr);

/// Minimal positive value of omega^2 ch^B_1 over lattice classes:
/// alpha^2 d / q where q is the lowest-terms denominator of beta.
Rational minimal_ch1(const Rational& alpha, const Rational& beta, const VarietyModel& model);

}  // namespace tiltwall
