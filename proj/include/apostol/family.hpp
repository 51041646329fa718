#pragma once

// The 2-variable unified Apostol-Euler/Bernoulli/Genocchi family
//
//   sum_n pM_n(x,y) t^n/n! = (-1)^r 2^{r(1-k)} t^{rk} / prod_i (alpha_i b^t - a^t) * e^{xt} phi(y,t)
//
// built as truncated series over the polynomial ring, plus the classical
// special cases and the pure 2-variable general polynomials p_n(x,y).

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <type_traits>
#include <variant>
#include <vector>

#include "apostol/errors.hpp"
#include "apostol/multipoly.hpp"
#include "apostol/power_series.hpp"
#include "apostol/rational.hpp"

namespace apostol {

/// Base of a^t or b^t, identified by its logarithm.
enum class LogBase { One, E, SymbolicA, SymbolicB };

inline MultiPoly log_of(LogBase base) {
    switch (base) {
        case LogBase::One: return MultiPoly(0);
        case LogBase::E: return MultiPoly(1);
        case LogBase::SymbolicA: return MultiPoly::var(VarId::LA);
        case LogBase::SymbolicB: return MultiPoly::var(VarId::LB);
    }
    return MultiPoly(0);
}

struct PhiUnit {
    friend bool operator==(const PhiUnit&, const PhiUnit&) = default;
};
/// e^{y t^m}; m = 2 is the Hermite Kampe de Feriet case.
struct GouldHopper {
    unsigned m = 2;
    friend bool operator==(const GouldHopper&, const GouldHopper&) = default;
};
/// C0(-y t^m) with C0 the 0-th order Tricomi function.
struct Laguerre {
    unsigned m = 1;
    friend bool operator==(const Laguerre&, const Laguerre&) = default;
};
/// 1 / (1 - y t^beta).
struct TruncatedExp {
    unsigned beta = 2;
    friend bool operator==(const TruncatedExp&, const TruncatedExp&) = default;
};

using PhiKind = std::variant<PhiUnit, GouldHopper, Laguerre, TruncatedExp>;

struct FamilySpec {
    unsigned r = 1;
    unsigned k = 0;
    LogBase a = LogBase::One;
    LogBase b = LogBase::E;
    std::vector<Rational> alphas{Rational(-1)};
    PhiKind phi = PhiUnit{};

    [[nodiscard]] unsigned rk() const { return r * k; }
    [[nodiscard]] std::size_t unit_alpha_count() const {
        return static_cast<std::size_t>(
            std::count_if(alphas.begin(), alphas.end(), [](const Rational& q) { return q.is_one(); }));
    }

    friend bool operator==(const FamilySpec&, const FamilySpec&) = default;
};

namespace detail {

inline void check_phi(const PhiKind& phi) {
    std::visit(
        [](const auto& p) {
            using P = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<P, GouldHopper> || std::is_same_v<P, Laguerre>) {
                if (p.m == 0) throw SpecError("phi parameter m must be at least 1");
            } else if constexpr (std::is_same_v<P, TruncatedExp>) {
                if (p.beta == 0) throw SpecError("phi parameter beta must be at least 1");
            }
        },
        phi);
}

inline void check_structure(const FamilySpec& spec) {
    if (spec.r == 0) throw SpecError("order r must be a positive integer");
    if (spec.alphas.size() != spec.r) {
        throw SpecError("expected " + std::to_string(spec.r) + " alphas, got " +
                        std::to_string(spec.alphas.size()));
    }
    if (spec.a == spec.b) throw SpecError("bases a and b must differ");
    check_phi(spec.phi);
}

}  // namespace detail

/// Full invariant check. Besides the structural rules, an alpha equal to 1 is
/// only admitted with (a, b) = (1, e), where e^t - 1 has unit leading
/// coefficient.
inline void validate(const FamilySpec& spec) {
    detail::check_structure(spec);
    if (spec.unit_alpha_count() > 0 && !(spec.a == LogBase::One && spec.b == LogBase::E)) {
        throw SpecError("alpha_i = 1 requires a = 1 and b = e (leading coefficient log b - log a "
                        "is not invertible otherwise)");
    }
    if (spec.unit_alpha_count() > spec.rk()) {
        throw SpecError("number of alpha_i equal to 1 exceeds r*k");
    }
}

inline PowerSeries phi_series(const PhiKind& phi, std::size_t order) {
    detail::check_phi(phi);
    const MultiPoly y = MultiPoly::var(VarId::Y);
    return std::visit(
        [&](const auto& p) -> PowerSeries {
            using P = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<P, PhiUnit>) {
                return PowerSeries::constant(MultiPoly(1), order);
            } else if constexpr (std::is_same_v<P, GouldHopper>) {
                return compose_monomial(exp_linear(MultiPoly(1), order), y, p.m);
            } else if constexpr (std::is_same_v<P, Laguerre>) {
                // C0(-u) = sum_j u^j / (j!)^2 with u = y t^m.
                std::vector<MultiPoly> c0(order);
                for (std::size_t j = 0; j < order; ++j) {
                    Rational f = factorial(static_cast<unsigned>(j));
                    c0[j] = MultiPoly((f * f).inverse());
                }
                return compose_monomial(PowerSeries(std::move(c0)), y, p.m);
            } else {
                std::vector<MultiPoly> geometric(order, MultiPoly(1));
                return compose_monomial(PowerSeries(std::move(geometric)), y, p.beta);
            }
        },
        phi);
}

/// prod_i (alpha_i b^t - a^t).
inline PowerSeries denominator_series(const FamilySpec& spec, std::size_t order) {
    PowerSeries bt = exp_linear(log_of(spec.b), order);
    PowerSeries at = exp_linear(log_of(spec.a), order);
    PowerSeries product = PowerSeries::constant(MultiPoly(1), order);
    for (const auto& alpha : spec.alphas) {
        product = product * (bt * MultiPoly(alpha) - at);
    }
    return product;
}

/// (-1)^r 2^{r(1-k)} t^{rk} / denominator, the generating function of the
/// numbers M_n. Alphas equal to 1 each contribute one power of t to the
/// denominator valuation, absorbed from t^{rk}.
inline PowerSeries prefactor_series(const FamilySpec& spec, std::size_t order) {
    detail::check_structure(spec);
    const std::size_t rk = spec.rk();
    const std::size_t v = spec.unit_alpha_count();
    if (v > rk) {
        throw ValuationExceedsNumerator(std::to_string(v) + " alphas equal to 1 but r*k = " +
                                        std::to_string(rk));
    }
    if (order < rk + 1) {
        throw OrderExceeded("family series needs order >= r*k + 1 = " + std::to_string(rk + 1));
    }
    const std::size_t internal = order + v;
    Rational scale = Rational(2).pow(static_cast<long>(spec.r) * (1 - static_cast<long>(spec.k)));
    if (spec.r % 2 == 1) scale = -scale;
    PowerSeries numerator = PowerSeries::monomial(MultiPoly(scale), rk, internal);
    return divide_with_valuation(numerator, denominator_series(spec, internal), v);
}

/// prefactor * e^{x_argument t} * (phi(y,t) if with_phi). x_argument is any
/// polynomial, e.g. x, x+z, z or c*x.
inline PowerSeries family_series(const FamilySpec& spec, const MultiPoly& x_argument, bool with_phi,
                                 std::size_t order) {
    PowerSeries s = prefactor_series(spec, order);
    if (!x_argument.is_zero()) s = s * exp_linear(x_argument, order);
    if (with_phi && !std::holds_alternative<PhiUnit>(spec.phi)) s = s * phi_series(spec.phi, order);
    return s;
}

inline PowerSeries unified_series(const FamilySpec& spec, bool include_x, std::size_t order) {
    return family_series(spec, include_x ? MultiPoly::var(VarId::X) : MultiPoly(0), true, order);
}

struct PolyTable {
    std::string label;
    std::optional<FamilySpec> spec;
    std::vector<MultiPoly> entries;  // entries[n] is the member of index n

    [[nodiscard]] std::size_t n_max() const { return entries.empty() ? 0 : entries.size() - 1; }
    friend bool operator==(const PolyTable&, const PolyTable&) = default;
};

/// n! [t^n] f for n = 0..n_max.
inline std::vector<MultiPoly> extract_all(const PowerSeries& f, std::size_t n_max) {
    std::vector<MultiPoly> out;
    out.reserve(n_max + 1);
    for (std::size_t n = 0; n <= n_max; ++n) out.push_back(extract(f, n));
    return out;
}

inline std::size_t internal_order(const FamilySpec& spec, std::size_t n_max) {
    return n_max + spec.rk() + 1;
}

inline PolyTable extract_table(const FamilySpec& spec, std::size_t n_max) {
    PowerSeries s = unified_series(spec, true, internal_order(spec, n_max));
    return PolyTable{"unified family", spec, extract_all(s, n_max)};
}

/// p_n(x,y) from e^{xt} phi(y,t).
inline PolyTable two_variable_table(const PhiKind& phi, std::size_t n_max) {
    std::size_t order = n_max + 1;
    PowerSeries s = exp_linear(MultiPoly::var(VarId::X), order) * phi_series(phi, order);
    return PolyTable{"2-variable general polynomials", std::nullopt, extract_all(s, n_max)};
}

inline PolyTable gould_hopper_table(unsigned m, std::size_t n_max) {
    PolyTable t = two_variable_table(GouldHopper{m}, n_max);
    t.label = "Gould-Hopper H_n^(" + std::to_string(m) + ")(x,y)";
    return t;
}

enum class ApostolKind { Bernoulli, Euler, Genocchi };

/// Classical Apostol families of order r, built straight from
///   (t/(lambda e^t - 1))^r e^{xt},  (2/(lambda e^t + 1))^r e^{xt},  (2t/(lambda e^t + 1))^r e^{xt}.
/// Used as the cross-check for the family reductions.
inline PolyTable special_case_oracle(ApostolKind which, unsigned r, const Rational& lambda,
                                     std::size_t n_max) {
    if (r == 0) throw SpecError("order r must be a positive integer");
    const std::size_t order = n_max + 2;
    PowerSeries et = exp_linear(MultiPoly(1), order);
    PowerSeries base(order);
    std::string name;
    switch (which) {
        case ApostolKind::Bernoulli: {
            PowerSeries den = et * MultiPoly(lambda) - PowerSeries::constant(MultiPoly(1), order);
            PowerSeries num = PowerSeries::monomial(MultiPoly(1), 1, order);
            base = divide_with_valuation(num, den, lambda.is_one() ? 1 : 0);
            name = "Apostol-Bernoulli";
            break;
        }
        case ApostolKind::Euler: {
            PowerSeries den = et * MultiPoly(lambda) + PowerSeries::constant(MultiPoly(1), order);
            base = PowerSeries::constant(MultiPoly(2), order) * invert(den);
            name = "Apostol-Euler";
            break;
        }
        case ApostolKind::Genocchi: {
            PowerSeries den = et * MultiPoly(lambda) + PowerSeries::constant(MultiPoly(1), order);
            base = PowerSeries::monomial(MultiPoly(2), 1, order) * invert(den);
            name = "Apostol-Genocchi";
            break;
        }
    }
    PowerSeries s = exp_linear(MultiPoly::var(VarId::X), base.order());
    for (unsigned i = 0; i < r; ++i) s = s * base;
    return PolyTable{name + " of order " + std::to_string(r) + ", lambda=" + lambda.str(), std::nullopt,
                     extract_all(s, n_max)};
}

enum class Preset { Bernoulli, Euler, Genocchi, GouldHopper, Hermite, Laguerre, TruncatedExp };

inline constexpr std::string_view preset_name(Preset p) {
    switch (p) {
        case Preset::Bernoulli: return "bernoulli";
        case Preset::Euler: return "euler";
        case Preset::Genocchi: return "genocchi";
        case Preset::GouldHopper: return "gould-hopper";
        case Preset::Hermite: return "hermite";
        case Preset::Laguerre: return "laguerre";
        case Preset::TruncatedExp: return "truncated-exp";
    }
    return "";
}

inline std::optional<Preset> parse_preset(std::string_view name) {
    for (Preset p : {Preset::Bernoulli, Preset::Euler, Preset::Genocchi, Preset::GouldHopper,
                     Preset::Hermite, Preset::Laguerre, Preset::TruncatedExp}) {
        if (preset_name(p) == name) return p;
    }
    return std::nullopt;
}

/// Default 2VGP choice for each preset.
inline PhiKind preset_phi(Preset p) {
    switch (p) {
        case Preset::GouldHopper: return GouldHopper{3};
        case Preset::Hermite: return GouldHopper{2};
        case Preset::Laguerre: return Laguerre{1};
        case Preset::TruncatedExp: return TruncatedExp{2};
        default: return PhiUnit{};
    }
}

/// Named parameter bundles. Bernoulli, Euler and Genocchi are the order-1
/// classical reductions with a = 1, b = e; the 2VGP presets put their phi on
/// top of the Apostol-Euler bundle.
inline FamilySpec preset_spec(Preset p) {
    FamilySpec s;
    s.r = 1;
    s.a = LogBase::One;
    s.b = LogBase::E;
    s.phi = preset_phi(p);
    switch (p) {
        case Preset::Bernoulli:
            s.k = 1;
            s.alphas = {Rational(1)};
            break;
        case Preset::Genocchi:
            s.k = 1;
            s.alphas = {Rational(-1)};
            break;
        default:
            s.k = 0;
            s.alphas = {Rational(-1)};
            break;
    }
    return s;
}

/// Apostol-Bernoulli, Euler and Genocchi bundles of order r with parameter
/// lambda: alpha_i = lambda, k = 1; alpha_i = -lambda, k = 0; alpha_i = -lambda, k = 1.
inline FamilySpec apostol_spec(ApostolKind which, unsigned r, const Rational& lambda,
                               PhiKind phi = PhiUnit{}) {
    FamilySpec s;
    s.r = r;
    s.a = LogBase::One;
    s.b = LogBase::E;
    s.phi = phi;
    switch (which) {
        case ApostolKind::Bernoulli:
            s.k = 1;
            s.alphas.assign(r, lambda);
            break;
        case ApostolKind::Euler:
            s.k = 0;
            s.alphas.assign(r, -lambda);
            break;
        case ApostolKind::Genocchi:
            s.k = 1;
            s.alphas.assign(r, -lambda);
            break;
    }
    return s;
}

/// Factor f with family member = f * classical member: (-1)^r, 1, 2^{-r}.
inline Rational reduction_factor(ApostolKind which, unsigned r) {
    switch (which) {
        case ApostolKind::Bernoulli: return Rational(-1).pow(r);
        case ApostolKind::Euler: return Rational(1);
        case ApostolKind::Genocchi: return Rational(2).pow(-static_cast<long>(r));
    }
    return Rational(1);
}

}  // namespace apostol
