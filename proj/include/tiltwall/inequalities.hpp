#pragma once

#include "tiltwall/model.hpp"
#include "tiltwall/numclass.hpp"

namespace tiltwall {

/// Discriminant numbers of a class at (omega, B). The *_tsq entry points take
/// t = alpha^2 directly; every field is a polynomial in t, so loci with
/// irrational alpha but rational alpha^2 stay exact.
struct DiscriminantReport {
    Rational delta;      // c^2 - 2 r d2, B-independent
    Rational delta_bar;  // (omega^2 ch^B_1)^2 - 2 omega^3 ch^B_0 * omega ch^B_2
    Rational d1;         // omega^2 ch^B_1
    Rational d2h;        // same as delta_bar
    Rational d3h;        // 2 (3 (omega^3 rk)^2 ch^B_3 - 3 (omega^3 rk)(omega^2 ch^B_1)(omega ch^B_2) + (omega^2 ch^B_1)^3)
};

Rational delta(const NumClass& v);

DiscriminantReport discriminants(const NumClass& v, const Rational& alpha, const Rational& beta,
                                 const VarietyModel& model);
DiscriminantReport discriminants_tsq(const NumClass& v, const Rational& tsq, const Rational& beta,
                                     const VarietyModel& model);

/// Admissibility of the quadratic-form parameters on a rank-1 lattice:
/// a >= -1, a + b >= 0, a + 1 + b >= 0.
bool valid_ab(const Rational& a, const Rational& b);

struct BgVerdict {
    bool holds;
    Rational margin;
};

/// Signed margin of omega^3 * omega Delta + f_{a,b}(ch^B_1) >= 0, which on a
/// rank-1 lattice collapses to alpha^4 d^2 (Delta + (a+b) (ch^B_1/H)^2).
BgVerdict check_bg_general(const NumClass& v, const Rational& alpha, const Rational& beta,
                           const Rational& a, const Rational& b, const VarietyModel& model);
BgVerdict check_bg_general_tsq(const NumClass& v, const Rational& tsq, const Rational& beta,
                               const Rational& a, const Rational& b, const VarietyModel& model);

/// Margin of ch^B_3 <= (omega^2/18) ch^B_1, defined on the locus Im z = 0
/// (enforced exactly; violations raise nu-not-zero). Nonnegative margin means
/// the bound holds.
Rational strong_bg_margin(const NumClass& v, const Rational& alpha, const Rational& beta,
                          const VarietyModel& model);
Rational strong_bg_margin_tsq(const NumClass& v, const Rational& tsq, const Rational& beta,
                              const VarietyModel& model);

/// Margin of the strict bound ch^B_3 < (omega^2/2) ch^B_1 on the same locus;
/// positive margin means the bound holds.
Rational ch3_half_margin(const NumClass& v, const Rational& alpha, const Rational& beta,
                         const VarietyModel& model);
Rational ch3_half_margin_tsq(const NumClass& v, const Rational& tsq, const Rational& beta,
                             const VarietyModel& model);

/// Exact check of the closed-form relation between the strong margin and the
/// higher discriminants on the Im z = 0 locus:
/// ch^B_3 - (omega^2/18) ch^B_1 = (d3h - 2 d1 d2h) / (6 (omega^3 rk)^2).
/// Requires nonzero rank. Expected true on every valid input.
bool higher_discriminant_identity(const NumClass& v, const Rational& alpha, const Rational& beta,
                                  const VarietyModel& model);
bool higher_discriminant_identity_tsq(const NumClass& v, const Rational& tsq, const Rational& beta,
                                      const VarietyModel& model);

/// Distance from the origin of the curve x + i f_omega(x) with
/// f_omega(x) = -omega^3/6 + 2x^2/omega^3; the minimum is attained at x = 0,
/// giving omega^3/6 = alpha^3 d / 6.
Rational support_smin(const Rational& alpha, const VarietyModel& model);

}  // namespace tiltwall
