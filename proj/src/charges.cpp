#include "tiltwall/charges.hpp"

#include "tiltwall/error.hpp"

namespace tiltwall {

namespace {

void require_ample(const Rational& alpha) {
    if (alpha.sign() <= 0) throw Error(Errc::invalid_ample_class, "alpha must be positive");
}

}  // namespace

ComplexQ z(const NumClass& v, const Rational& alpha, const Rational& beta,
           const VarietyModel& model) {
    require_ample(alpha);
    NumClass w = twist(v, beta);
    Rational d(model.d);
    return {
        d * (-w.d3 + alpha * alpha / 2 * w.c),
        d * (alpha * w.d2 - alpha * alpha * alpha / 6 * w.r),
    };
}

ComplexQ z_bar(const NumClass& v, const Rational& alpha, const Rational& beta,
               const VarietyModel& model) {
    require_ample(alpha);
    NumClass w = twist(v, beta);
    Rational d(model.d);
    return {alpha * alpha * d / 2 * w.c, z(v, alpha, beta, model).im};
}

ComplexQ z_st(const NumClass& v, const Rational& s, const Rational& t) {
    return {-v.d3 + s * v.c, v.d2 - t * v.r};
}

SlopeValue mu(const NumClass& v, const Rational& alpha, const Rational& beta,
              const VarietyModel& model) {
    require_ample(alpha);
    if (v.r.is_zero()) return SlopeValue::infinity();
    Rational d(model.d);
    return SlopeValue::finite(alpha * alpha * d * (v.c - beta * v.r) / v.r);
}

SlopeValue nu(const NumClass& v, const Rational& alpha, const Rational& beta,
              [[maybe_unused]] const VarietyModel& model) {
    // the model degree scales numerator and denominator alike
    require_ample(alpha);
    NumClass w = twist(v, beta);
    if (w.c.is_zero()) return SlopeValue::infinity();
    return SlopeValue::finite((alpha * w.d2 - alpha * alpha * alpha * w.r / 6) /
                              (alpha * alpha * w.c));
}

SlopeValue mu_hat(const NumClass& v, const Rational& alpha, const Rational& beta,
                  [[maybe_unused]] const VarietyModel& model, bool* rank_warning) {
    require_ample(alpha);
    if (rank_warning) *rank_warning = !v.r.is_zero();
    NumClass w = twist(v, beta);
    if (w.c.is_zero()) return SlopeValue::infinity();
    return SlopeValue::finite(w.d2 / (alpha * w.c));
}

Rational minimal_ch1(const Rational& alpha, const Rational& beta, const VarietyModel& model) {
    require_ample(alpha);
    // c - beta*r over integer (r, c) ranges over (1/q)Z for beta = p/q in
    // lowest terms; the least positive value is 1/q.
    Rational q(beta.den());
    return alpha * alpha * Rational(model.d) / q;
}

}  // namespace tiltwall
