#include "tiltwall/inequalities.hpp"

#include "tiltwall/error.hpp"

namespace tiltwall {

namespace {

void require_tsq(const Rational& tsq) {
    if (tsq.sign() <= 0)
        throw Error(Errc::invalid_ample_class, "t = alpha^2 must be positive");
}

// Im z = 0 at alpha^2 = t reduces to d2 = t r / 6 on the twisted class.
void require_nu_zero(const NumClass& w, const Rational& tsq) {
    if (w.d2 != tsq * w.r / 6)
        throw Error(Errc::nu_not_zero, "Im z must vanish exactly for this check");
}

}  // namespace

Rational delta(const NumClass& v) {
    return v.c * v.c - 2 * v.r * v.d2;
}

DiscriminantReport discriminants_tsq(const NumClass& v, const Rational& tsq, const Rational& beta,
                                     const VarietyModel& model) {
    require_tsq(tsq);
    NumClass w = twist(v, beta);
    Rational d(model.d);
    DiscriminantReport rep;
    rep.delta = delta(v);
    rep.d1 = tsq * d * w.c;
    rep.delta_bar = tsq * tsq * d * d * (w.c * w.c - 2 * w.r * w.d2);
    rep.d2h = rep.delta_bar;
    rep.d3h = 2 * tsq * tsq * tsq * d * d * d *
              (3 * w.r * w.r * w.d3 - 3 * w.r * w.c * w.d2 + w.c * w.c * w.c);
    return rep;
}

DiscriminantReport discriminants(const NumClass& v, const Rational& alpha, const Rational& beta,
                                 const VarietyModel& model) {
    if (alpha.sign() <= 0) throw Error(Errc::invalid_ample_class, "alpha must be positive");
    return discriminants_tsq(v, alpha * alpha, beta, model);
}

bool valid_ab(const Rational& a, const Rational& b) {
    return a >= Rational(-1) && a + b >= Rational(0) && a + 1 + b >= Rational(0);
}

BgVerdict check_bg_general_tsq(const NumClass& v, const Rational& tsq, const Rational& beta,
                               const Rational& a, const Rational& b, const VarietyModel& model) {
    require_tsq(tsq);
    if (!valid_ab(a, b))
        throw Error(Errc::invalid_ab_parameters, "(a, b) fails the rank-1 admissibility test");
    NumClass w = twist(v, beta);
    Rational d(model.d);
    Rational margin = tsq * tsq * d * d * (delta(v) + (a + b) * w.c * w.c);
    return {margin.sign() >= 0, margin};
}

BgVerdict check_bg_general(const NumClass& v, const Rational& alpha, const Rational& beta,
                           const Rational& a, const Rational& b, const VarietyModel& model) {
    if (alpha.sign() <= 0) throw Error(Errc::invalid_ample_class, "alpha must be positive");
    return check_bg_general_tsq(v, alpha * alpha, beta, a, b, model);
}

namespace {

Rational ch3_bound_margin_tsq(const NumClass& v, const Rational& tsq, const Rational& beta,
                              const VarietyModel& model, const Rational& coeff) {
    require_tsq(tsq);
    NumClass w = twist(v, beta);
    require_nu_zero(w, tsq);
    Rational d(model.d);
    return coeff * tsq * d * w.c - d * w.d3;
}

}  // namespace

Rational strong_bg_margin_tsq(const NumClass& v, const Rational& tsq, const Rational& beta,
                              const VarietyModel& model) {
    return ch3_bound_margin_tsq(v, tsq, beta, model, Rational(1, 18));
}

Rational strong_bg_margin(const NumClass& v, const Rational& alpha, const Rational& beta,
                          const VarietyModel& model) {
    if (alpha.sign() <= 0) throw Error(Errc::invalid_ample_class, "alpha must be positive");
    return strong_bg_margin_tsq(v, alpha * alpha, beta, model);
}

Rational ch3_half_margin_tsq(const NumClass& v, const Rational& tsq, const Rational& beta,
                             const VarietyModel& model) {
    return ch3_bound_margin_tsq(v, tsq, beta, model, Rational(1, 2));
}

Rational ch3_half_margin(const NumClass& v, const Rational& alpha, const Rational& beta,
                         const VarietyModel& model) {
    if (alpha.sign() <= 0) throw Error(Errc::invalid_ample_class, "alpha must be positive");
    return ch3_half_margin_tsq(v, alpha * alpha, beta, model);
}

bool higher_discriminant_identity_tsq(const NumClass& v, const Rational& tsq, const Rational& beta,
                                      const VarietyModel& model) {
    require_tsq(tsq);
    NumClass w = twist(v, beta);
    if (w.r.is_zero()) throw Error(Errc::zero_rank, "identity requires nonzero rank");
    require_nu_zero(w, tsq);
    Rational d(model.d);
    DiscriminantReport rep = discriminants_tsq(v, tsq, beta, model);
    // (omega^3 rk)^2 = t^3 d^2 r^2
    Rational lhs = d * w.d3 - tsq * d * w.c / 18;
    Rational rhs = (rep.d3h - 2 * rep.d1 * rep.d2h) /
                   (6 * tsq * tsq * tsq * d * d * w.r * w.r);
    return lhs == rhs;
}

bool higher_discriminant_identity(const NumClass& v, const Rational& alpha, const Rational& beta,
                                  const VarietyModel& model) {
    if (alpha.sign() <= 0) throw Error(Errc::invalid_ample_class, "alpha must be positive");
    return higher_discriminant_identity_tsq(v, alpha * alpha, beta, model);
}

Rational support_smin(const Rational& alpha, const VarietyModel& model) {
    if (alpha.sign() <= 0) throw Error(Errc::invalid_ample_class, "alpha must be positive");
    // |x + i f(x)|^2 has derivative 2x (1/3 + 8x^2/omega^6): the only
    // critical point is x = 0, where the value is omega^3/6.
    return alpha * alpha * alpha * Rational(model.d) / 6;
}

}  // namespace tiltwall
