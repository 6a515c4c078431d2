#include "tiltwall/numclass.hpp"

#include "tiltwall/error.hpp"

namespace tiltwall {

NumClass line_bundle(const Rational& k) {
    return {1, k, k * k / 2, k * k * k / 6};
}

NumClass twist(const NumClass& v, const Rational& beta) {
    const Rational& b = beta;
    return {
        v.r,
        v.c - b * v.r,
        v.d2 - b * v.c + b * b / 2 * v.r,
        v.d3 - b * v.d2 + b * b / 2 * v.c - b * b * b / 6 * v.r,
    };
}

NumClass dualize(const NumClass& v) {
    return {-v.r, v.c, -v.d2, v.d3};
}

NumClass tensor_line(const NumClass& v, const Rational& k) {
    return twist(v, -k);
}

Degrees degrees(const NumClass& v, const VarietyModel& model, const Rational& alpha) {
    if (alpha.sign() <= 0) throw Error(Errc::invalid_ample_class, "alpha must be positive");
    Rational d(model.d);
    return {alpha * alpha * alpha * d * v.r, alpha * alpha * d * v.c, alpha * d * v.d2, d * v.d3};
}

bool is_lattice_point(const NumClass& v, const VarietyModel& model) {
    return v.r.is_integer() && v.c.is_integer() && (Rational(model.lam2) * v.d2).is_integer() &&
           (Rational(model.lam3) * v.d3).is_integer();
}

NumClass grr_pushforward(const Rational& r, const Rational& lambda, const Rational& s,
                         const Rational& m, const VarietyModel& model, const Rational& beta) {
    if (m.sign() <= 0) throw Error(Errc::invalid_divisor, "divisor multiple m must be positive");
    Rational d(model.d);
    NumClass out{
        0,
        r * m,
        -r * m * m / 2 + lambda,
        (r * m * m * m * d / 6 - m * lambda * d / 2 + s) / d,
    };
    return twist(out, beta);
}

}  // namespace tiltwall
