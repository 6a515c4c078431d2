#pragma once

#include <array>

#include "tiltwall/charges.hpp"

namespace tiltwall {

/// Central charge valued in complex polynomials of the scaling parameter m,
/// degree <= 3. coeffs[k] multiplies m^k.
struct PolyCharge {
    std::array<ComplexQ, 4> coeffs{};

    bool is_zero() const;
    /// -1 for the zero polynomial.
    int degree() const;
    ComplexQ eval(const Rational& m) const;

    friend bool operator==(const PolyCharge& a, const PolyCharge& b) {
        return a.coeffs == b.coeffs;
    }
    friend bool operator!=(const PolyCharge& a, const PolyCharge& b) { return !(a == b); }
    PolyCharge operator-() const;
};

/// Weight-split charge: -ch^B_3 + m i omega ch^B_2
/// + m^2 ((omega^2/2) ch^B_1 - i (omega^3/6) ch^B_0).
PolyCharge zp(const NumClass& v, const Rational& alpha, const Rational& beta,
              const VarietyModel& model);

/// Surface-like charge: -ch^B_3
/// + m^2 ((omega^2/2) ch^B_1 + i (omega ch^B_2 - (omega^3/6) ch^B_0)).
PolyCharge zb_poly(const NumClass& v, const Rational& alpha, const Rational& beta,
                   const VarietyModel& model);

/// Large-volume family m -> z(v, m*alpha, beta).
PolyCharge z_inf(const NumClass& v, const Rational& alpha, const Rational& beta,
                 const VarietyModel& model);

enum class PhaseOrder { Less, Equal, Greater };

/// Orders two charges by phase for m >> 0, assuming the asymptotic phase gap
/// stays inside (-1, 1). Decided by the sign of the leading coefficient of
/// Im(conj(p) * q). Throws degenerate-charge on zero input and
/// phase-gap-violation on antiparallel rays.
PhaseOrder compare_limit_phase(const PolyCharge& p, const PolyCharge& q);

}  // namespace tiltwall
