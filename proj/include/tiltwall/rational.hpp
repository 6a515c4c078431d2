#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

namespace tiltwall {

/// Exact arbitrary-precision rational, always kept in canonical lowest terms
/// (positive denominator, gcd(num, den) = 1).
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}
    Rational(long num, long den);
    explicit Rational(mpz_class n) : v_(std::move(n)) {}
    explicit Rational(mpq_class q);

    /// Parses "p", "p/q" with optional leading sign. Returns nullopt on
    /// malformed input or zero denominator.
    static std::optional<Rational> parse(std::string_view s);

    /// Canonical string: "p" when the denominator is 1, else "p/q".
    std::string str() const;

    const mpq_class& raw() const { return v_; }
    mpz_class num() const { return v_.get_num(); }
    mpz_class den() const { return v_.get_den(); }

    int sign() const { return sgn(v_); }
    bool is_zero() const { return sign() == 0; }
    bool is_integer() const { return v_.get_den() == 1; }

    Rational abs() const;
    mpz_class floor() const;
    mpz_class ceil() const;
    double to_double() const { return v_.get_d(); }

    /// Fixed-point decimal rendering with `digits` places after the point,
    /// rounded half away from zero.
    std::string decimal(int digits) const;

    Rational operator-() const;
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { a += b; return a; }
    friend Rational operator-(Rational a, const Rational& b) { a -= b; return a; }
    friend Rational operator*(Rational a, const Rational& b) { a *= b; return a; }
    friend Rational operator/(Rational a, const Rational& b) { a /= b; return a; }

    friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) == 0; }
    friend bool operator!=(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) != 0; }
    friend bool operator<(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) < 0; }
    friend bool operator<=(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) <= 0; }
    friend bool operator>(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) > 0; }
    friend bool operator>=(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) >= 0; }

private:
    mpq_class v_;
};

inline Rational min(const Rational& a, const Rational& b) { return a < b ? a : b; }
inline Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }

}  // namespace tiltwall
