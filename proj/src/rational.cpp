#include "tiltwall/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace tiltwall {

Rational::Rational(long num, long den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational::Rational(mpq_class q) : v_(std::move(q)) {
    if (v_.get_den() == 0) throw std::domain_error("rational with zero denominator");
    v_.canonicalize();
}

namespace {

bool digits_only(std::string_view s) {
    if (s.empty()) return false;
    for (char ch : s)
        if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
    return true;
}

// [+-]?digits, no whitespace, no empty digit run
std::optional<mpz_class> parse_int(std::string_view s) {
    bool neg = false;
    if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
        neg = s.front() == '-';
        s.remove_prefix(1);
    }
    if (!digits_only(s)) return std::nullopt;
    mpz_class z(std::string(s), 10);
    if (neg) z = -z;
    return z;
}

}  // namespace

std::optional<Rational> Rational::parse(std::string_view s) {
    auto slash = s.find('/');
    if (slash == std::string_view::npos) {
        auto n = parse_int(s);
        if (!n) return std::nullopt;
        return Rational(std::move(*n));
    }
    auto n = parse_int(s.substr(0, slash));
    auto d = parse_int(s.substr(slash + 1));
    if (!n || !d || *d == 0) return std::nullopt;
    mpq_class q(*n, *d);
    q.canonicalize();
    return Rational(std::move(q));
}

std::string Rational::str() const {
    if (is_integer()) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rational Rational::abs() const {
    Rational out;
    out.v_ = ::abs(v_);
    return out;
}

mpz_class Rational::floor() const {
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), v_.get_num().get_mpz_t(), v_.get_den().get_mpz_t());
    return q;
}

mpz_class Rational::ceil() const {
    mpz_class q;
    mpz_cdiv_q(q.get_mpz_t(), v_.get_num().get_mpz_t(), v_.get_den().get_mpz_t());
    return q;
}

std::string Rational::decimal(int digits) const {
    if (digits < 0) digits = 0;
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
    // round(|v| * scale) half away from zero
    mpz_class n = ::abs(v_.get_num()) * scale;
    mpz_class d = v_.get_den();
    mpz_class scaled = (2 * n + d) / (2 * d);
    mpz_class whole = scaled / scale;
    mpz_class frac = scaled % scale;
    std::string out = sign() < 0 && scaled != 0 ? "-" : "";
    out += whole.get_str();
    if (digits > 0) {
        std::string f = frac.get_str();
        out += "." + std::string(static_cast<size_t>(digits) - f.size(), '0') + f;
    }
    return out;
}

Rational Rational::operator-() const {
    Rational out;
    out.v_ = -v_;
    return out;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("rational division by zero");
    v_ /= o.v_;
    return *this;
}

}  // namespace tiltwall
