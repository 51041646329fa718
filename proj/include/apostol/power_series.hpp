#pragma once

// Truncated formal power series in t with MultiPoly coefficients. Every value
// carries its truncation order: the series is known modulo t^order.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "apostol/errors.hpp"
#include "apostol/multipoly.hpp"

namespace apostol {

class PowerSeries {
public:
    explicit PowerSeries(std::size_t order) : coeffs_(order) {
        if (order == 0) throw OrderExceeded("PowerSeries: order must be at least 1");
    }
    explicit PowerSeries(std::vector<MultiPoly> coeffs) : coeffs_(std::move(coeffs)) {
        if (coeffs_.empty()) throw OrderExceeded("PowerSeries: order must be at least 1");
    }

    /// c * t^power, known modulo t^order.
    static PowerSeries monomial(const MultiPoly& c, std::size_t power, std::size_t order) {
        PowerSeries s(order);
        if (power < order) s.coeffs_[power] = c;
        return s;
    }

    static PowerSeries constant(const MultiPoly& c, std::size_t order) {
        return monomial(c, 0, order);
    }

    [[nodiscard]] std::size_t order() const { return coeffs_.size(); }
    [[nodiscard]] const std::vector<MultiPoly>& coeffs() const { return coeffs_; }

    /// Coefficient of t^n (not multiplied by n!).
    [[nodiscard]] const MultiPoly& operator[](std::size_t n) const {
        if (n >= coeffs_.size()) {
            throw OrderExceeded("PowerSeries: coefficient t^" + std::to_string(n) +
                                " beyond order " + std::to_string(coeffs_.size()));
        }
        return coeffs_[n];
    }

    /// Index of the lowest nonzero known coefficient, if any.
    [[nodiscard]] std::optional<std::size_t> valuation() const {
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            if (!coeffs_[i].is_zero()) return i;
        }
        return std::nullopt;
    }

    [[nodiscard]] PowerSeries truncated(std::size_t order) const {
        if (order > coeffs_.size()) {
            throw OrderExceeded("PowerSeries: cannot extend order " + std::to_string(coeffs_.size()) +
                                " to " + std::to_string(order));
        }
        return PowerSeries(std::vector<MultiPoly>(coeffs_.begin(),
                                                  coeffs_.begin() + static_cast<std::ptrdiff_t>(order)));
    }

    /// Applies f to every known coefficient.
    template <class F>
    [[nodiscard]] PowerSeries map(F&& f) const {
        std::vector<MultiPoly> out;
        out.reserve(coeffs_.size());
        for (const auto& c : coeffs_) out.push_back(f(c));
        return PowerSeries(std::move(out));
    }

    friend PowerSeries operator+(const PowerSeries& f, const PowerSeries& g) {
        std::size_t n = std::min(f.order(), g.order());
        std::vector<MultiPoly> out(n);
        for (std::size_t i = 0; i < n; ++i) out[i] = f.coeffs_[i] + g.coeffs_[i];
        return PowerSeries(std::move(out));
    }

    friend PowerSeries operator-(const PowerSeries& f, const PowerSeries& g) {
        std::size_t n = std::min(f.order(), g.order());
        std::vector<MultiPoly> out(n);
        for (std::size_t i = 0; i < n; ++i) out[i] = f.coeffs_[i] - g.coeffs_[i];
        return PowerSeries(std::move(out));
    }

    friend PowerSeries operator*(const PowerSeries& f, const MultiPoly& s) {
        return f.map([&](const MultiPoly& c) { return c * s; });
    }
    friend PowerSeries operator*(const MultiPoly& s, const PowerSeries& f) { return f * s; }

    /// Cauchy product, truncated to the smaller operand order.
    friend PowerSeries operator*(const PowerSeries& f, const PowerSeries& g) {
        std::size_t n = std::min(f.order(), g.order());
        std::vector<MultiPoly> out(n);
        for (std::size_t i = 0; i < n; ++i) {
            if (f.coeffs_[i].is_zero()) continue;
            for (std::size_t j = 0; i + j < n; ++j) {
                if (g.coeffs_[j].is_zero()) continue;
                out[i + j] += f.coeffs_[i] * g.coeffs_[j];
            }
        }
        return PowerSeries(std::move(out));
    }

    friend bool operator==(const PowerSeries& f, const PowerSeries& g) { return f.coeffs_ == g.coeffs_; }

private:
    std::vector<MultiPoly> coeffs_;
};

/// exp(coefficient * t) = sum coefficient^n t^n / n!.
inline PowerSeries exp_linear(const MultiPoly& coefficient, std::size_t order) {
    std::vector<MultiPoly> out(order);
    if (order == 0) throw OrderExceeded("exp_linear: order must be at least 1");
    out[0] = MultiPoly(1);
    for (std::size_t n = 1; n < order; ++n) {
        out[n] = out[n - 1] * coefficient * Rational(1, static_cast<long>(n));
    }
    return PowerSeries(std::move(out));
}

/// Multiplicative inverse by forward substitution. The constant term must be a
/// nonzero rational.
inline PowerSeries invert(const PowerSeries& f) {
    auto c0 = f[0].as_rational();
    if (!c0 || c0->is_zero()) {
        throw NotAUnit("invert: constant term " + f[0].str() + " is not a nonzero rational");
    }
    Rational inv0 = c0->inverse();
    std::size_t n = f.order();
    std::vector<MultiPoly> g(n);
    g[0] = MultiPoly(inv0);
    for (std::size_t i = 1; i < n; ++i) {
        MultiPoly acc;
        for (std::size_t j = 1; j <= i; ++j) {
            if (f[j].is_zero() || g[i - j].is_zero()) continue;
            acc += f[j] * g[i - j];
        }
        g[i] = acc * (-inv0);
    }
    return PowerSeries(std::move(g));
}

/// Drops the first `shift` coefficients, i.e. multiplies by t^-shift.
inline PowerSeries shift_down(const PowerSeries& f, std::size_t shift) {
    if (shift >= f.order()) {
        throw OrderExceeded("shift_down: shift " + std::to_string(shift) + " leaves no coefficients of order " +
                            std::to_string(f.order()));
    }
    return PowerSeries(std::vector<MultiPoly>(f.coeffs().begin() + static_cast<std::ptrdiff_t>(shift),
                                              f.coeffs().end()));
}

/// num / den where den has valuation exactly `expected_valuation` with a
/// rational unit leading coefficient. The result has order
/// min(num.order, den.order) - expected_valuation.
inline PowerSeries divide_with_valuation(const PowerSeries& num, const PowerSeries& den,
                                         std::size_t expected_valuation) {
    auto vd = den.valuation();
    if (!vd || *vd != expected_valuation) {
        throw ValuationMismatch("divide_with_valuation: denominator valuation " +
                                (vd ? std::to_string(*vd) : std::string("undetermined")) +
                                ", expected " + std::to_string(expected_valuation));
    }
    auto vn = num.valuation();
    if (vn && *vn < expected_valuation) {
        throw ValuationMismatch("divide_with_valuation: numerator valuation " + std::to_string(*vn) +
                                " below " + std::to_string(expected_valuation));
    }
    std::size_t order = std::min(num.order(), den.order());
    auto lead = den[expected_valuation].as_rational();
    if (!lead) {
        throw NotAUnit("divide_with_valuation: leading coefficient " + den[expected_valuation].str() +
                       " is not a rational unit");
    }
    PowerSeries n = shift_down(num.truncated(order), expected_valuation);
    PowerSeries d = shift_down(den.truncated(order), expected_valuation);
    return n * invert(d);
}

/// Substitutes t -> scale * t^power.
inline PowerSeries compose_monomial(const PowerSeries& f, const MultiPoly& scale, std::size_t power) {
    if (power == 0) throw ValuationMismatch("compose_monomial: power must be at least 1");
    std::vector<MultiPoly> out(f.order());
    MultiPoly scale_pow(1);
    for (std::size_t j = 0; j * power < f.order(); ++j) {
        out[j * power] = f[j] * scale_pow;
        scale_pow *= scale;
    }
    return PowerSeries(std::move(out));
}

/// Substitutes t -> c * t.
inline PowerSeries scale_t(const PowerSeries& f, const Rational& c) {
    std::vector<MultiPoly> out(f.order());
    Rational cn(1);
    for (std::size_t n = 0; n < f.order(); ++n) {
        out[n] = f[n] * cn;
        cn *= c;
    }
    return PowerSeries(std::move(out));
}

/// n! times the coefficient of t^n.
inline MultiPoly extract(const PowerSeries& f, std::size_t n) {
    if (n >= f.order()) {
        throw OrderExceeded("extract: index " + std::to_string(n) + " not below order " +
                            std::to_string(f.order()));
    }
    return f[n] * factorial(static_cast<unsigned>(n));
}

}  // namespace apostol
