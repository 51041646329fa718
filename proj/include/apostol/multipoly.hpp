#pragma once

// Sparse multivariate polynomials over Rational in the closed variable set
// {x, y, z, La, Lb}. La and Lb stand for log a and log b.

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>

#include "apostol/rational.hpp"

namespace apostol {

enum class VarId : std::uint8_t { X = 0, Y = 1, Z = 2, LA = 3, LB = 4 };

inline constexpr std::size_t kVarCount = 5;
inline constexpr std::array<VarId, kVarCount> kAllVars{VarId::X, VarId::Y, VarId::Z, VarId::LA,
                                                      VarId::LB};

inline constexpr std::string_view var_name(VarId v) {
    constexpr std::array<std::string_view, kVarCount> names{"x", "y", "z", "La", "Lb"};
    return names[static_cast<std::size_t>(v)];
}

/// Lower-case key used by the JSON schema.
inline constexpr std::string_view var_key(VarId v) {
    constexpr std::array<std::string_view, kVarCount> keys{"x", "y", "z", "la", "lb"};
    return keys[static_cast<std::size_t>(v)];
}

using Exponents = std::array<std::uint32_t, kVarCount>;

inline std::uint32_t total_degree(const Exponents& e) {
    return std::accumulate(e.begin(), e.end(), std::uint32_t{0});
}

/// Graded lexicographic order, largest monomial first. Iterating a term map
/// with this comparator yields the canonical printing order.
struct GradedLexDescending {
    bool operator()(const Exponents& a, const Exponents& b) const {
        auto da = total_degree(a);
        auto db = total_degree(b);
        if (da != db) return da > db;
        return a > b;
    }
};

using Bindings = std::map<VarId, Rational>;

class MultiPoly {
public:
    using TermMap = std::map<Exponents, Rational, GradedLexDescending>;

    MultiPoly() = default;
    MultiPoly(const Rational& c) {  // NOLINT(google-explicit-constructor)
        if (!c.is_zero()) terms_.emplace(Exponents{}, c);
    }
    MultiPoly(long c) : MultiPoly(Rational(c)) {}  // NOLINT
    MultiPoly(int c) : MultiPoly(Rational(c)) {}   // NOLINT

    static MultiPoly var(VarId v, std::uint32_t power = 1) {
        Exponents e{};
        e[static_cast<std::size_t>(v)] = power;
        return monomial(e, Rational(1));
    }

    static MultiPoly monomial(const Exponents& e, const Rational& c) {
        MultiPoly p;
        if (!c.is_zero()) p.terms_.emplace(e, c);
        return p;
    }

    [[nodiscard]] const TermMap& terms() const { return terms_; }
    [[nodiscard]] std::size_t size() const { return terms_.size(); }
    [[nodiscard]] bool is_zero() const { return terms_.empty(); }

    /// True when the polynomial has no variable dependence (zero included).
    [[nodiscard]] bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && total_degree(terms_.begin()->first) == 0);
    }

    [[nodiscard]] std::optional<Rational> as_rational() const {
        if (!is_constant()) return std::nullopt;
        return constant_term();
    }

    [[nodiscard]] Rational constant_term() const { return coefficient(Exponents{}); }

    [[nodiscard]] Rational coefficient(const Exponents& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    [[nodiscard]] std::uint32_t degree(VarId v) const {
        std::uint32_t d = 0;
        for (const auto& [e, c] : terms_) d = std::max(d, e[static_cast<std::size_t>(v)]);
        return d;
    }

    /// Adds c * monomial(e) in place, dropping the term if it cancels.
    void add_term(const Exponents& e, const Rational& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    MultiPoly& operator+=(const MultiPoly& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    MultiPoly& operator-=(const MultiPoly& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }
    MultiPoly& operator*=(const Rational& s) {
        if (s.is_zero()) {
            terms_.clear();
            return *this;
        }
        for (auto& [e, c] : terms_) c *= s;
        return *this;
    }

    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator-(MultiPoly a) {
        for (auto& [e, c] : a.terms_) c = -c;
        return a;
    }
    friend MultiPoly operator*(MultiPoly a, const Rational& s) { return a *= s; }
    friend MultiPoly operator*(const Rational& s, MultiPoly a) { return a *= s; }

    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
        MultiPoly out;
        if (a.is_zero() || b.is_zero()) return out;
        for (const auto& [ea, ca] : a.terms_) {
            for (const auto& [eb, cb] : b.terms_) {
                Exponents e;
                for (std::size_t i = 0; i < kVarCount; ++i) e[i] = ea[i] + eb[i];
                out.add_term(e, ca * cb);
            }
        }
        return out;
    }
    MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }

    friend bool operator==(const MultiPoly& a, const MultiPoly& b) { return a.terms_ == b.terms_; }

    [[nodiscard]] MultiPoly pow(unsigned n) const {
        MultiPoly result(1);
        MultiPoly base = *this;
        while (n > 0) {
            if (n & 1U) result *= base;
            n >>= 1U;
            if (n > 0) base *= base;
        }
        return result;
    }

    /// Replaces every bound variable by its value; unbound variables stay.
    [[nodiscard]] MultiPoly substitute(const Bindings& bindings) const {
        if (bindings.empty()) return *this;
        MultiPoly out;
        for (const auto& [e, c] : terms_) {
            Exponents rest = e;
            Rational coeff = c;
            for (const auto& [v, value] : bindings) {
                auto i = static_cast<std::size_t>(v);
                if (rest[i] == 0) continue;
                coeff *= value.pow(rest[i]);
                rest[i] = 0;
            }
            out.add_term(rest, coeff);
        }
        return out;
    }

    /// The polynomial with v replaced by s*v.
    [[nodiscard]] MultiPoly scale_variable(VarId v, const Rational& s) const {
        MultiPoly out;
        auto i = static_cast<std::size_t>(v);
        for (const auto& [e, c] : terms_) out.add_term(e, c * s.pow(e[i]));
        return out;
    }

    /// Plain-text rendering, e.g. "x^2 - x + 1/6" or "x^2 + 2*y".
    [[nodiscard]] std::string str() const {
        if (terms_.empty()) return "0";
        std::string out;
        bool first = true;
        for (const auto& [e, c] : terms_) {
            bool negative = c.sign() < 0;
            if (first) {
                if (negative) out += "-";
            } else {
                out += negative ? " - " : " + ";
            }
            first = false;
            Rational mag = c.abs();
            std::string mono = monomial_text(e);
            if (mono.empty()) {
                out += mag.str();
            } else if (mag.is_one()) {
                out += mono;
            } else {
                out += mag.str() + "*" + mono;
            }
        }
        return out;
    }

    /// LaTeX rendering in the same term order as str().
    [[nodiscard]] std::string latex() const {
        if (terms_.empty()) return "0";
        std::string out;
        bool first = true;
        for (const auto& [e, c] : terms_) {
            bool negative = c.sign() < 0;
            if (first) {
                if (negative) out += "-";
            } else {
                out += negative ? " - " : " + ";
            }
            first = false;
            Rational mag = c.abs();
            std::string mono = monomial_latex(e);
            std::string coeff = mag.is_integer()
                                    ? mag.numerator()
                                    : "\\frac{" + mag.numerator() + "}{" + mag.denominator() + "}";
            if (mono.empty()) {
                out += coeff;
            } else if (mag.is_one()) {
                out += mono;
            } else {
                out += coeff + " " + mono;
            }
        }
        return out;
    }

private:
    static std::string monomial_text(const Exponents& e) {
        std::string s;
        for (VarId v : kAllVars) {
            auto p = e[static_cast<std::size_t>(v)];
            if (p == 0) continue;
            if (!s.empty()) s += "*";
            s += var_name(v);
            if (p > 1) s += "^" + std::to_string(p);
        }
        return s;
    }

    static std::string monomial_latex(const Exponents& e) {
        static constexpr std::array<std::string_view, kVarCount> names{"x", "y", "z", "L_a", "L_b"};
        std::string s;
        for (VarId v : kAllVars) {
            auto i = static_cast<std::size_t>(v);
            if (e[i] == 0) continue;
            if (!s.empty()) s += " ";
            s += names[i];
            if (e[i] > 1) s += "^{" + std::to_string(e[i]) + "}";
        }
        return s;
    }

    TermMap terms_;
};

inline MultiPoly substitute(const MultiPoly& p, const Bindings& bindings) {
    return p.substitute(bindings);
}

}  // namespace apostol
