#include "tiltwall/scenarios.hpp"

#include "tiltwall/error.hpp"
#include "tiltwall/inequalities.hpp"

namespace tiltwall {

DivisorScenario DivisorScenario::make(Rational r, long m, Rational alpha_sq, Rational s,
                                      VarietyModel model) {
    if (r.sign() <= 0) throw Error(Errc::scenario_invariant, "rank r must be positive");
    if (m < 1) throw Error(Errc::invalid_divisor, "divisor multiple m must be >= 1");
    if (alpha_sq.sign() <= 0)
        throw Error(Errc::invalid_ample_class, "alpha^2 must be positive");
    return {std::move(r), m, std::move(alpha_sq), std::move(s), std::move(model)};
}

CurveScenario CurveScenario::make(long D, long dcurve, long g) {
    if (D < 1 || dcurve < 1)
        throw Error(Errc::scenario_invariant, "degrees must be positive");
    if (2 * dcurve >= D)
        throw Error(Errc::scenario_invariant, "curve degree must satisfy d < D/2");
    return {D, dcurve, g};
}

Rational bog1_bound(const DivisorScenario& sc) {
    Rational m(sc.m);
    return Rational(sc.model.d) * sc.r * m * m * m / 8;
}

Rational bog2_bound(const DivisorScenario& sc) {
    return sc.r * Rational(sc.model.d) * Rational(sc.m) * sc.alpha_sq / 6;
}

Rational rez_lower_bound(const DivisorScenario& sc) {
    if (sc.s > bog1_bound(sc))
        throw Error(Errc::bound_violated, "s exceeds the discriminant bound");
    Rational m(sc.m);
    return sc.r * Rational(sc.model.d) * m / 24 * (12 * sc.alpha_sq - m * m);
}

DivisorCheck divisor_check(const DivisorScenario& sc) {
    Rational b1 = bog1_bound(sc), b2 = bog2_bound(sc);
    if (sc.s > min(b1, b2))
        throw Error(Errc::hypothesis_violated, "s exceeds min of the two bounds");
    Rational m(sc.m);
    // lambda = r m^2 / 2 puts the pushforward on the Im z = 0 locus.
    NumClass push = grr_pushforward(sc.r, sc.r * m * m / 2, sc.s, m, sc.model, 0);
    Rational margin = strong_bg_margin_tsq(push, sc.alpha_sq, 0, sc.model);
    auto active = 3 * m * m <= 4 * sc.alpha_sq ? DivisorCheck::Case::Bog1
                                               : DivisorCheck::Case::Bog2;
    return {margin.sign() >= 0, active, margin, push};
}

NumClass curve_ideal_class(const CurveScenario& cs) {
    CurveScenario::make(cs.D, cs.dcurve, cs.g);  // revalidate
    Rational D(cs.D), d(cs.dcurve), g(cs.g);
    Rational ch3_oc = (1 - g) - d / 2 * (4 - D);
    NumClass curve{0, 0, d / D, ch3_oc / D};
    return tensor_line(line_bundle(0) - curve, 1);
}

std::vector<CastelnuovoRow> castelnuovo_verify(long D_lo, long D_hi) {
    std::vector<CastelnuovoRow> rows;
    for (long D = D_lo; D <= D_hi; ++D) {
        for (long d = 1; 2 * d < D; ++d) {
            Rational rd(d), rD(D);
            CastelnuovoRow row{
                D,
                d,
                (rd - 1) * (rd - 2) / 2,
                rd * rD / 2 - 4 * rd / 3 + 1,
                3 - 6 * rd / rD,
                false,
            };
            row.holds = row.castelnuovo_bound <= row.bg_bound;
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

}  // namespace tiltwall
