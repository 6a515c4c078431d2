#pragma once

#include "tiltwall/error.hpp"
#include "tiltwall/rational.hpp"

namespace tiltwall {

/// A slope value: a finite exact rational or +infinity (the torsion
/// convention). Totally ordered with +infinity above every finite value.
class SlopeValue {
public:
    static SlopeValue infinity() { return SlopeValue(true, 0); }
    static SlopeValue finite(Rational q) { return SlopeValue(false, std::move(q)); }

    bool is_infinite() const { return infinite_; }
    const Rational& value() const {
        if (infinite_) throw Error(Errc::precondition_violated, "slope is +infinity");
        return q_;
    }

    SlopeValue operator-() const {
        if (infinite_) throw Error(Errc::precondition_violated, "cannot negate +infinity slope");
        return finite(-q_);
    }

    friend bool operator==(const SlopeValue& a, const SlopeValue& b) {
        if (a.infinite_ || b.infinite_) return a.infinite_ == b.infinite_;
        return a.q_ == b.q_;
    }
    friend bool operator!=(const SlopeValue& a, const SlopeValue& b) { return !(a == b); }
    friend bool operator<(const SlopeValue& a, const SlopeValue& b) {
        if (a.infinite_) return false;
        if (b.infinite_) return true;
        return a.q_ < b.q_;
    }
    friend bool operator>(const SlopeValue& a, const SlopeValue& b) { return b < a; }
    friend bool operator<=(const SlopeValue& a, const SlopeValue& b) { return !(b < a); }
    friend bool operator>=(const SlopeValue& a, const SlopeValue& b) { return !(a < b); }

private:
    SlopeValue(bool inf, Rational q) : infinite_(inf), q_(std::move(q)) {}
    bool infinite_;
    Rational q_;
};

}  // namespace tiltwall
