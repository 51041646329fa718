#pragma once

// Exact arbitrary-precision rationals. Thin value wrapper over GMP's mpq_class
// that keeps the canonical form (reduced, positive denominator) at all times.

#include <compare>
#include <cstdint>
#include <functional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

#include <gmpxx.h>

namespace apostol {

class Rational {
public:
    Rational() = default;
    Rational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
    Rational(int value) : value_(static_cast<long>(value)) {}  // NOLINT
    Rational(long num, long den) {
        if (den == 0) {
            throw std::domain_error("Rational: zero denominator");
        }
        value_ = mpq_class(num, den);
        value_.canonicalize();
    }
    explicit Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

    /// Parses "p", "-p" or "p/q" in base 10. Throws std::invalid_argument on
    /// malformed input or a zero denominator.
    static Rational parse(std::string_view text) {
        std::string s(text);
        if (s.empty()) {
            throw std::invalid_argument("Rational: empty string");
        }
        auto slash = s.find('/');
        auto valid_int = [](std::string_view part) {
            if (part.empty()) return false;
            std::size_t i = (part[0] == '-' || part[0] == '+') ? 1 : 0;
            if (i == part.size()) return false;
            for (; i < part.size(); ++i) {
                if (part[i] < '0' || part[i] > '9') return false;
            }
            return true;
        };
        Rational r;
        if (slash == std::string::npos) {
            if (!valid_int(s)) throw std::invalid_argument("Rational: malformed '" + s + "'");
            if (s[0] == '+') s.erase(0, 1);
            r.value_ = mpq_class(mpz_class(s, 10));
            return r;
        }
        std::string num = s.substr(0, slash);
        std::string den = s.substr(slash + 1);
        if (!valid_int(num) || !valid_int(den) || den[0] == '-' || den[0] == '+') {
            throw std::invalid_argument("Rational: malformed '" + s + "'");
        }
        if (num[0] == '+') num.erase(0, 1);
        mpz_class d(den, 10);
        if (d == 0) throw std::invalid_argument("Rational: zero denominator in '" + s + "'");
        r.value_ = mpq_class(mpz_class(num, 10), d);
        r.value_.canonicalize();
        return r;
    }

    [[nodiscard]] bool is_zero() const { return sgn(value_) == 0; }
    [[nodiscard]] bool is_one() const { return value_ == 1; }
    [[nodiscard]] int sign() const { return sgn(value_); }
    [[nodiscard]] bool is_integer() const { return value_.get_den() == 1; }

    [[nodiscard]] std::string numerator() const { return value_.get_num().get_str(); }
    [[nodiscard]] std::string denominator() const { return value_.get_den().get_str(); }

    /// Canonical text: "p" for integers, "p/q" otherwise.
    [[nodiscard]] std::string str() const {
        if (is_integer()) return value_.get_num().get_str();
        return value_.get_num().get_str() + "/" + value_.get_den().get_str();
    }

    [[nodiscard]] Rational abs() const {
        Rational r;
        r.value_ = ::abs(value_);
        return r;
    }

    [[nodiscard]] Rational inverse() const {
        if (is_zero()) throw std::domain_error("Rational: inverse of zero");
        Rational r;
        r.value_ = 1 / value_;
        return r;
    }

    /// Integer power; negative exponents invert.
    [[nodiscard]] Rational pow(long e) const {
        Rational base = e < 0 ? inverse() : *this;
        unsigned long n = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
        Rational r;
        mpz_pow_ui(r.value_.get_num_mpz_t(), base.value_.get_num_mpz_t(), n);
        mpz_pow_ui(r.value_.get_den_mpz_t(), base.value_.get_den_mpz_t(), n);
        return r;
    }

    Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
    Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
    Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw std::domain_error("Rational: division by zero");
        value_ /= o.value_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a) {
        Rational r;
        r.value_ = -a.value_;
        return r;
    }

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

    [[nodiscard]] const mpq_class& raw() const { return value_; }

private:
    mpq_class value_{0};
};

inline Rational factorial(unsigned n) {
    Rational r(1);
    for (unsigned i = 2; i <= n; ++i) r *= Rational(static_cast<long>(i));
    return r;
}

inline Rational binomial(unsigned n, unsigned k) {
    if (k > n) return Rational(0);
    mpz_class c;
    mpz_bin_uiui(c.get_mpz_t(), n, k);
    return Rational(mpq_class(c));
}

}  // namespace apostol
