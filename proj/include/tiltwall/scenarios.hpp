#pragma once

#include <vector>

#include "tiltwall/model.hpp"
#include "tiltwall/numclass.hpp"

namespace tiltwall {

/// Sheaf of rank r on a divisor S in |mH|, normalized so the pushforward has
/// vanishing tilt slope, with ch2-degree s on S. The ample scale enters every
/// bound through alpha^2 only, so the scenario carries alpha_sq and admits
/// irrational alpha with rational square.
struct DivisorScenario {
    Rational r;
    long m = 1;
    Rational alpha_sq;
    Rational s;
    VarietyModel model;

    static DivisorScenario make(Rational r, long m, Rational alpha_sq, Rational s,
                                VarietyModel model);
};

/// Curve of degree dcurve and arithmetic genus g on a degree-D hypersurface
/// model; requires 2*dcurve < D.
struct CurveScenario {
    long D = 0;
    long dcurve = 0;
    long g = 0;

    static CurveScenario make(long D, long dcurve, long g);
};

/// Discriminant bound on S: s <= d r m^3 / 8.
Rational bog1_bound(const DivisorScenario& sc);

/// Restriction bound: s <= r d m alpha^2 / 6.
Rational bog2_bound(const DivisorScenario& sc);

/// Lower bound (r d m / 24)(12 alpha^2 - m^2) for Re z of the pushforward,
/// valid whenever s stays below bog1_bound (else bound-violated).
Rational rez_lower_bound(const DivisorScenario& sc);

struct DivisorCheck {
    bool holds;
    enum class Case { Bog1, Bog2 } active_case;
    Rational margin;
    NumClass pushforward;
};

/// Builds the slope-zero pushforward class and evaluates the ch3 bound with
/// coefficient 1/18. Requires s <= min(bog1, bog2); the active case is Bog1
/// exactly when 3 m^2 <= 4 alpha^2.
DivisorCheck divisor_check(const DivisorScenario& sc);

/// Class of L tensor I_C on the hypersurface model of degree D.
NumClass curve_ideal_class(const CurveScenario& cs);

struct CastelnuovoRow {
    long D;
    long dcurve;
    Rational castelnuovo_bound;  // (d-1)(d-2)/2
    Rational bg_bound;           // d D / 2 - 4 d / 3 + 1
    Rational t_scale_sq;         // 3 - 6 d / D, the slope-zero ample scale squared
    bool holds;
};

/// Sweeps D in [D_lo, D_hi] and every degree 1 <= d < D/2, checking the
/// extremal genus bound exactly.
std::vector<CastelnuovoRow> castelnuovo_verify(long D_lo, long D_hi);

}  // namespace tiltwall
