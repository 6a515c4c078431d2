#include "tiltwall/polycharge.hpp"

#include "tiltwall/error.hpp"

namespace tiltwall {

bool PolyCharge::is_zero() const {
    for (const auto& c : coeffs)
        if (!c.is_zero()) return false;
    return true;
}

int PolyCharge::degree() const {
    for (int k = 3; k >= 0; --k)
        if (!coeffs[static_cast<size_t>(k)].is_zero()) return k;
    return -1;
}

ComplexQ PolyCharge::eval(const Rational& m) const {
    ComplexQ acc = coeffs[3];
    for (int k = 2; k >= 0; --k) {
        acc = ComplexQ{acc.re * m, acc.im * m} + coeffs[static_cast<size_t>(k)];
    }
    return acc;
}

PolyCharge PolyCharge::operator-() const {
    PolyCharge out;
    for (size_t k = 0; k < 4; ++k) out.coeffs[k] = -coeffs[k];
    return out;
}

namespace {

void require_ample(const Rational& alpha) {
    if (alpha.sign() <= 0) throw Error(Errc::invalid_ample_class, "alpha must be positive");
}

}  // namespace

PolyCharge zp(const NumClass& v, const Rational& alpha, const Rational& beta,
              const VarietyModel& model) {
    require_ample(alpha);
    NumClass w = twist(v, beta);
    Rational d(model.d);
    PolyCharge out;
    out.coeffs[0] = {-d * w.d3, 0};
    out.coeffs[1] = {0, alpha * d * w.d2};
    out.coeffs[2] = {alpha * alpha * d / 2 * w.c, -alpha * alpha * alpha * d / 6 * w.r};
    return out;
}

PolyCharge zb_poly(const NumClass& v, const Rational& alpha, const Rational& beta,
                   const VarietyModel& model) {
    require_ample(alpha);
    NumClass w = twist(v, beta);
    Rational d(model.d);
    PolyCharge out;
    out.coeffs[0] = {-d * w.d3, 0};
    out.coeffs[2] = {alpha * alpha * d / 2 * w.c,
                     d * (alpha * w.d2 - alpha * alpha * alpha * w.r / 6)};
    return out;
}

PolyCharge z_inf(const NumClass& v, const Rational& alpha, const Rational& beta,
                 const VarietyModel& model) {
    require_ample(alpha);
    NumClass w = twist(v, beta);
    Rational d(model.d);
    PolyCharge out;
    out.coeffs[0] = {-d * w.d3, 0};
    out.coeffs[1] = {0, alpha * d * w.d2};
    out.coeffs[2] = {alpha * alpha * d / 2 * w.c, 0};
    out.coeffs[3] = {0, -alpha * alpha * alpha * d / 6 * w.r};
    return out;
}

PhaseOrder compare_limit_phase(const PolyCharge& p, const PolyCharge& q) {
    if (p.is_zero() || q.is_zero())
        throw Error(Errc::degenerate_charge, "zero polynomial charge in phase comparison");

    // conj(p)(m) * q(m) as a degree-6 complex polynomial
    std::array<ComplexQ, 7> prod{};
    for (size_t i = 0; i < 4; ++i)
        for (size_t j = 0; j < 4; ++j) prod[i + j] = prod[i + j] + p.coeffs[i].conj() * q.coeffs[j];

    for (int k = 6; k >= 0; --k) {
        const Rational& w = prod[static_cast<size_t>(k)].im;
        if (!w.is_zero()) return w.sign() < 0 ? PhaseOrder::Greater : PhaseOrder::Less;
    }
    // Im(conj(p) q) vanishes identically: rays are parallel or antiparallel.
    for (int k = 6; k >= 0; --k) {
        const Rational& r = prod[static_cast<size_t>(k)].re;
        if (!r.is_zero()) {
            if (r.sign() > 0) return PhaseOrder::Equal;
            throw Error(Errc::phase_gap_violation, "antiparallel polynomial charges");
        }
    }
    throw Error(Errc::degenerate_charge, "vanishing product of nonzero charges");
}

}  // namespace tiltwall
