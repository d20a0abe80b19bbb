#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

namespace gravnoise {

// Exact rational arithmetic on 64-bit numerator/denominator with 128-bit
// intermediates.  Channel coefficients and half-integer exponents are kept in
// this form until the floating-point boundary, so that comparisons against
// tabulated exact values need zero tolerance.
class Rational {
public:
    constexpr Rational() = default;
    constexpr Rational(std::int64_t n) : num_(n) {}
    Rational(std::int64_t n, std::int64_t d) { assign(n, d); }

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    double value() const {
        return static_cast<double>(num_) / static_cast<double>(den_);
    }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }

    Rational operator-() const {
        Rational r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return reduced(i128(a.num_) * b.den_ + i128(b.num_) * a.den_,
                       i128(a.den_) * b.den_);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return a + (-b);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return reduced(i128(a.num_) * b.num_, i128(a.den_) * b.den_);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num_ == 0) throw std::domain_error("Rational: division by zero");
        return reduced(i128(a.num_) * b.den_, i128(a.den_) * b.num_);
    }

    Rational& operator+=(const Rational& b) { return *this = *this + b; }
    Rational& operator-=(const Rational& b) { return *this = *this - b; }
    Rational& operator*=(const Rational& b) { return *this = *this * b; }
    Rational& operator/=(const Rational& b) { return *this = *this / b; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) {
        return !(a == b);
    }
    friend bool operator<(const Rational& a, const Rational& b) {
        return i128(a.num_) * b.den_ < i128(b.num_) * a.den_;
    }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    Rational pow(int e) const {
        if (e < 0) return Rational(1) / pow(-e);
        Rational r(1);
        for (int i = 0; i < e; ++i) r *= *this;
        return r;
    }

    // "n", or "n/d".
    std::string str() const {
        std::string s = std::to_string(num_);
        if (den_ != 1) s += "/" + std::to_string(den_);
        return s;
    }

private:
    using i128 = __int128;

    static i128 abs128(i128 v) { return v < 0 ? -v : v; }

    static i128 gcd128(i128 a, i128 b) {
        a = abs128(a);
        b = abs128(b);
        while (b != 0) {
            i128 t = a % b;
            a = b;
            b = t;
        }
        return a;
    }

    static Rational reduced(i128 n, i128 d) {
        if (d == 0) throw std::domain_error("Rational: zero denominator");
        if (d < 0) {
            n = -n;
            d = -d;
        }
        if (n == 0) return Rational();
        const i128 g = gcd128(n, d);
        n /= g;
        d /= g;
        constexpr i128 lo = std::numeric_limits<std::int64_t>::min();
        constexpr i128 hi = std::numeric_limits<std::int64_t>::max();
        if (n < lo || n > hi || d > hi) {
            throw std::overflow_error("Rational: value exceeds 64-bit storage");
        }
        Rational r;
        r.num_ = static_cast<std::int64_t>(n);
        r.den_ = static_cast<std::int64_t>(d);
        return r;
    }

    void assign(std::int64_t n, std::int64_t d) { *this = reduced(n, d); }

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

// A closed-form constant q * pi^(p/2) with q rational and p integer.  Gamma
// values at half-integer arguments and the (4*pi)^(-d/2) prefactors all live
// in this set, so every channel coefficient stays exact until a caller asks
// for a double.
class PiPower {
public:
    PiPower() = default;
    PiPower(Rational coeff, int half_pi_exponent = 0)
        : coeff_(coeff), half_pi_(coeff.is_zero() ? 0 : half_pi_exponent) {}

    const Rational& coeff() const { return coeff_; }
    // Exponent of sqrt(pi): the represented value is coeff * pi^(half_pi/2).
    int half_pi() const { return half_pi_; }

    bool is_zero() const { return coeff_.is_zero(); }

    double value() const {
        return coeff_.value() * std::pow(std::numbers::pi, 0.5 * half_pi_);
    }

    PiPower operator-() const { return PiPower(-coeff_, half_pi_); }

    friend PiPower operator*(const PiPower& a, const PiPower& b) {
        return PiPower(a.coeff_ * b.coeff_, a.half_pi_ + b.half_pi_);
    }
    friend PiPower operator*(const PiPower& a, const Rational& q) {
        return PiPower(a.coeff_ * q, a.half_pi_);
    }
    friend PiPower operator*(const Rational& q, const PiPower& a) { return a * q; }
    friend PiPower operator/(const PiPower& a, const PiPower& b) {
        return PiPower(a.coeff_ / b.coeff_, a.half_pi_ - b.half_pi_);
    }
    friend PiPower operator/(const PiPower& a, const Rational& q) {
        return PiPower(a.coeff_ / q, a.half_pi_);
    }

    // Addition is defined only between constants carrying the same power of
    // pi; anything else would leave the exact set.
    friend PiPower operator+(const PiPower& a, const PiPower& b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        if (a.half_pi_ != b.half_pi_) {
            throw std::invalid_argument(
                "PiPower: cannot add constants with different pi powers");
        }
        return PiPower(a.coeff_ + b.coeff_, a.half_pi_);
    }
    friend PiPower operator-(const PiPower& a, const PiPower& b) { return a + (-b); }

    friend bool operator==(const PiPower& a, const PiPower& b) {
        if (a.is_zero() && b.is_zero()) return true;
        return a.coeff_ == b.coeff_ && a.half_pi_ == b.half_pi_;
    }
    friend bool operator!=(const PiPower& a, const PiPower& b) { return !(a == b); }

    // Render as an ASCII closed form, e.g. "1/(960*pi^2)", "-1/(4*pi)",
    // "3*sqrt(pi)/4", "10*pi^2", "0".
    std::string str() const {
        if (coeff_.is_zero()) return "0";
        const bool negative = coeff_.num() < 0;
        const std::int64_t n = negative ? -coeff_.num() : coeff_.num();
        const std::int64_t d = coeff_.den();

        std::string num_part;
        std::string den_part;
        const std::string pi_up = pi_factor(half_pi_ > 0 ? half_pi_ : 0);
        const std::string pi_dn = pi_factor(half_pi_ < 0 ? -half_pi_ : 0);

        if (n != 1 || pi_up.empty()) num_part = std::to_string(n);
        if (!pi_up.empty()) {
            if (!num_part.empty()) num_part += "*";
            num_part += pi_up;
        }
        if (d != 1) den_part = std::to_string(d);
        if (!pi_dn.empty()) {
            if (!den_part.empty()) den_part += "*";
            den_part += pi_dn;
        }

        std::string out = negative ? "-" : "";
        out += num_part;
        if (!den_part.empty()) {
            out += "/";
            if (den_part.find('*') != std::string::npos) {
                out += "(" + den_part + ")";
            } else {
                out += den_part;
            }
        }
        return out;
    }

private:
    // pi^(h/2) for h >= 0 as a factor string ("", "sqrt(pi)", "pi",
    // "pi*sqrt(pi)", "pi^2", ...).
    static std::string pi_factor(int h) {
        if (h == 0) return "";
        const int whole = h / 2;
        const bool root = (h % 2) != 0;
        std::string s;
        if (whole == 1) {
            s = "pi";
        } else if (whole > 1) {
            s = "pi^" + std::to_string(whole);
        }
        if (root) {
            if (!s.empty()) s += "*";
            s += "sqrt(pi)";
        }
        return s;
    }

    Rational coeff_;
    int half_pi_ = 0;
};

// n! as an exact rational; the arguments used by the coefficient formulas are
// small (n <= 20 fits in 64 bits).
inline Rational factorial_exact(int n) {
    if (n < 0) throw std::invalid_argument("factorial_exact: negative argument");
    if (n > 20) throw std::overflow_error("factorial_exact: argument too large");
    std::int64_t f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return Rational(f);
}

// Gamma(x) for positive integer or half-integer x, passed as twice_x = 2x.
// Integer arguments give factorials; half-integer arguments use
// Gamma(k + 1/2) = (2k)! / (4^k k!) * sqrt(pi).
inline PiPower gamma_exact(int twice_x) {
    if (twice_x <= 0) {
        throw std::invalid_argument("gamma_exact: argument must be positive");
    }
    if (twice_x % 2 == 0) {
        return PiPower(factorial_exact(twice_x / 2 - 1));
    }
    const int k = (twice_x - 1) / 2;
    std::int64_t four_k = 1;
    for (int i = 0; i < k; ++i) four_k *= 4;
    const Rational q = factorial_exact(2 * k) / (Rational(four_k) * factorial_exact(k));
    return PiPower(q, 1);
}

}  // namespace gravnoise
