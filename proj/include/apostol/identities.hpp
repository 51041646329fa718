#pragma once

// Exact verifiers for the series definition, the implicit summation formulae
// and the symmetry identity of the unified family. Each verifier computes the
// left side by building a generating series directly and the right side as a
// finite convolution of separately extracted tables, then compares the two
// polynomials per index.

#include <array>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "apostol/family.hpp"

namespace apostol {

enum class IdentityId {
    SeriesDefinition,  // pM_n = sum_j C(n,j) M_{n-j} p_j(x,y)
    Shift,             // pM_n(x+z) = sum_m C(n,m) pM_m(x) z^{n-m}
    ShiftMixed,        // pM_n(x+z) = sum_j C(n,j) M_j(x) p_{n-j}(z,y)
    DoubleIndex,       // pM_{n+m}(z) = sum_{p,q} C(n,p) C(m,q) (z-x)^{p+q} pM_{n+m-p-q}(x)
    ShiftOne,          // pM_n(x+1) = sum_m C(n,m) pM_{n-m}(x)
    ShiftGeneral,      // pM_n(x+z) = sum_m C(n,m) M_{n-m}(z) p_m(x,y)
    Symmetry,          // sum C(n,m) d^m c^{n-m} pM_{n-m}(dx) pM_m(cx) = (c <-> d)
};

inline constexpr std::array<IdentityId, 7> kAllIdentities{
    IdentityId::SeriesDefinition, IdentityId::Shift,        IdentityId::ShiftMixed,
    IdentityId::DoubleIndex,      IdentityId::ShiftOne,     IdentityId::ShiftGeneral,
    IdentityId::Symmetry};

inline constexpr std::string_view identity_name(IdentityId id) {
    switch (id) {
        case IdentityId::SeriesDefinition: return "series-def";
        case IdentityId::Shift: return "shift";
        case IdentityId::ShiftMixed: return "shift-mixed";
        case IdentityId::DoubleIndex: return "double-index";
        case IdentityId::ShiftOne: return "shift-one";
        case IdentityId::ShiftGeneral: return "shift-general";
        case IdentityId::Symmetry: return "symmetry";
    }
    return "";
}

inline std::optional<IdentityId> parse_identity(std::string_view name) {
    for (IdentityId id : kAllIdentities) {
        if (identity_name(id) == name) return id;
    }
    return std::nullopt;
}

struct Counterexample {
    std::vector<std::size_t> indices;
    MultiPoly lhs;
    MultiPoly rhs;
};

struct Verdict {
    bool passed = true;
    IdentityId identity = IdentityId::SeriesDefinition;
    FamilySpec spec;
    std::size_t max_n = 0;
    std::optional<Counterexample> counterexample;
};

namespace detail {

inline MultiPoly x_var() { return MultiPoly::var(VarId::X); }
inline MultiPoly z_var() { return MultiPoly::var(VarId::Z); }

/// Compares per index in ascending order and records the first mismatch.
template <class Lhs, class Rhs>
Verdict compare_single_index(IdentityId id, const FamilySpec& spec, std::size_t n_max, Lhs&& lhs,
                             Rhs&& rhs) {
    Verdict v{true, id, spec, n_max, std::nullopt};
    for (std::size_t n = 0; n <= n_max; ++n) {
        MultiPoly l = lhs(n);
        MultiPoly r = rhs(n);
        if (!(l == r)) {
            v.passed = false;
            v.counterexample = Counterexample{{n}, std::move(l), std::move(r)};
            return v;
        }
    }
    return v;
}

/// sum_j C(n,j) u_{n-j} w_j.
inline MultiPoly binomial_convolution(const std::vector<MultiPoly>& u, const std::vector<MultiPoly>& w,
                                      std::size_t n) {
    MultiPoly acc;
    for (std::size_t j = 0; j <= n; ++j) {
        if (u[n - j].is_zero() || w[j].is_zero()) continue;
        acc += binomial(static_cast<unsigned>(n), static_cast<unsigned>(j)) * (u[n - j] * w[j]);
    }
    return acc;
}

}  // namespace detail

inline Verdict verify_series_def(const FamilySpec& spec, std::size_t n_max) {
    const std::size_t order = internal_order(spec, n_max);
    auto direct = extract_all(unified_series(spec, true, order), n_max);
    auto numbers = extract_all(prefactor_series(spec, order), n_max);
    auto gvp = extract_all(exp_linear(detail::x_var(), order) * phi_series(spec.phi, order), n_max);
    return detail::compare_single_index(
        IdentityId::SeriesDefinition, spec, n_max, [&](std::size_t n) { return direct[n]; },
        [&](std::size_t n) { return detail::binomial_convolution(numbers, gvp, n); });
}

inline Verdict verify_shift(const FamilySpec& spec, std::size_t n_max) {
    const std::size_t order = internal_order(spec, n_max);
    auto shifted = extract_all(family_series(spec, detail::x_var() + detail::z_var(), true, order), n_max);
    auto table = extract_table(spec, n_max).entries;
    std::vector<MultiPoly> z_powers;
    for (std::size_t j = 0; j <= n_max; ++j) z_powers.push_back(MultiPoly::var(VarId::Z, static_cast<std::uint32_t>(j)));
    return detail::compare_single_index(
        IdentityId::Shift, spec, n_max, [&](std::size_t n) { return shifted[n]; },
        [&](std::size_t n) {
            // sum_m C(n,m) pM_m(x,y) z^{n-m}
            MultiPoly acc;
            for (std::size_t m = 0; m <= n; ++m) {
                acc += binomial(static_cast<unsigned>(n), static_cast<unsigned>(m)) * (table[m] * z_powers[n - m]);
            }
            return acc;
        });
}

inline Verdict verify_shift_mixed(const FamilySpec& spec, std::size_t n_max) {
    const std::size_t order = internal_order(spec, n_max);
    auto shifted = extract_all(family_series(spec, detail::x_var() + detail::z_var(), true, order), n_max);
    auto apostol_x = extract_all(family_series(spec, detail::x_var(), false, order), n_max);
    auto gvp_z = extract_all(exp_linear(detail::z_var(), order) * phi_series(spec.phi, order), n_max);
    return detail::compare_single_index(
        IdentityId::ShiftMixed, spec, n_max, [&](std::size_t n) { return shifted[n]; },
        [&](std::size_t n) {
            // sum_j C(n,j) M_j(x) p_{n-j}(z,y)
            return detail::binomial_convolution(gvp_z, apostol_x, n);
        });
}

inline Verdict verify_double_index(const FamilySpec& spec, std::size_t n_max, std::size_t m_max) {
    const std::size_t top = n_max + m_max;
    const std::size_t order = internal_order(spec, top);
    auto at_z = extract_all(family_series(spec, detail::z_var(), true, order), top);
    auto table = extract_table(spec, top).entries;

    const MultiPoly diff = detail::z_var() - detail::x_var();
    std::vector<MultiPoly> diff_powers{MultiPoly(1)};
    for (std::size_t s = 1; s <= top; ++s) diff_powers.push_back(diff_powers.back() * diff);

    // (z-x)^s * pM_j, shared by every (n, m) with n + m = s + j.
    std::map<std::pair<std::size_t, std::size_t>, MultiPoly> products;
    auto product = [&](std::size_t s, std::size_t j) -> const MultiPoly& {
        auto [it, inserted] = products.try_emplace({s, j});
        if (inserted) it->second = diff_powers[s] * table[j];
        return it->second;
    };

    Verdict v{true, IdentityId::DoubleIndex, spec, n_max, std::nullopt};
    for (std::size_t n = 0; n <= n_max; ++n) {
        for (std::size_t m = 0; m <= m_max; ++m) {
            // Terms with equal p + q share the factor (z-x)^{p+q} pM_{n+m-p-q};
            // collect their binomial weights first.
            std::vector<Rational> weight(n + m + 1, Rational(0));
            for (std::size_t p = 0; p <= n; ++p) {
                for (std::size_t q = 0; q <= m; ++q) {
                    weight[p + q] += binomial(static_cast<unsigned>(n), static_cast<unsigned>(p)) *
                                     binomial(static_cast<unsigned>(m), static_cast<unsigned>(q));
                }
            }
            MultiPoly rhs;
            for (std::size_t s = 0; s <= n + m; ++s) {
                if (weight[s].is_zero()) continue;
                rhs += weight[s] * product(s, n + m - s);
            }
            const MultiPoly& lhs = at_z[n + m];
            if (!(lhs == rhs)) {
                v.passed = false;
                v.counterexample = Counterexample{{n, m}, lhs, std::move(rhs)};
                return v;
            }
        }
    }
    return v;
}

inline Verdict verify_shift_one(const FamilySpec& spec, std::size_t n_max) {
    const std::size_t order = internal_order(spec, n_max);
    auto shifted = extract_all(unified_series(spec, true, order) * exp_linear(MultiPoly(1), order), n_max);
    auto table = extract_table(spec, n_max).entries;
    return detail::compare_single_index(
        IdentityId::ShiftOne, spec, n_max, [&](std::size_t n) { return shifted[n]; },
        [&](std::size_t n) {
            MultiPoly acc;
            for (std::size_t m = 0; m <= n; ++m) {
                acc += binomial(static_cast<unsigned>(n), static_cast<unsigned>(m)) * table[n - m];
            }
            return acc;
        });
}

inline Verdict verify_shift_general(const FamilySpec& spec, std::size_t n_max) {
    const std::size_t order = internal_order(spec, n_max);
    auto shifted = extract_all(family_series(spec, detail::x_var() + detail::z_var(), true, order), n_max);
    auto apostol_z = extract_all(family_series(spec, detail::z_var(), false, order), n_max);
    auto gvp_x = extract_all(exp_linear(detail::x_var(), order) * phi_series(spec.phi, order), n_max);
    return detail::compare_single_index(
        IdentityId::ShiftGeneral, spec, n_max, [&](std::size_t n) { return shifted[n]; },
        [&](std::size_t n) {
            // sum_m C(n,m) M_{n-m}(z) p_m(x,y)
            return detail::binomial_convolution(apostol_z, gvp_x, n);
        });
}

/// Checks
///   sum_m C(n,m) d^m c^{n-m} pM_{n-m}(dx,y) pM_m(cx,y)
///     = sum_m C(n,m) c^m d^{n-m} pM_{n-m}(cx,y) pM_m(dx,y).
/// The left side reads pM_j(cx,y) off the series with e^{cxt}; the right side
/// rescales x in the base table.
inline Verdict verify_symmetry(const FamilySpec& spec, const Rational& c, const Rational& d,
                               std::size_t n_max) {
    if (c.is_zero() || d.is_zero()) throw SpecError("symmetry scalars c and d must be nonzero");
    const std::size_t order = internal_order(spec, n_max);
    auto at_cx = extract_all(family_series(spec, c * detail::x_var(), true, order), n_max);
    auto at_dx = extract_all(family_series(spec, d * detail::x_var(), true, order), n_max);
    auto table = extract_table(spec, n_max).entries;
    std::vector<MultiPoly> scaled_c, scaled_d;
    for (const auto& p : table) {
        scaled_c.push_back(p.scale_variable(VarId::X, c));
        scaled_d.push_back(p.scale_variable(VarId::X, d));
    }
    return detail::compare_single_index(
        IdentityId::Symmetry, spec, n_max,
        [&](std::size_t n) {
            MultiPoly acc;
            for (std::size_t m = 0; m <= n; ++m) {
                Rational w = binomial(static_cast<unsigned>(n), static_cast<unsigned>(m)) *
                             d.pow(static_cast<long>(m)) * c.pow(static_cast<long>(n - m));
                acc += w * (at_dx[n - m] * at_cx[m]);
            }
            return acc;
        },
        [&](std::size_t n) {
            MultiPoly acc;
            for (std::size_t m = 0; m <= n; ++m) {
                Rational w = binomial(static_cast<unsigned>(n), static_cast<unsigned>(m)) *
                             c.pow(static_cast<long>(m)) * d.pow(static_cast<long>(n - m));
                acc += w * (scaled_c[n - m] * scaled_d[m]);
            }
            return acc;
        });
}

struct VerifyOptions {
    Rational c{2};
    Rational d{3};
    std::optional<std::size_t> m_max;  // defaults to n_max
};

inline Verdict verify(IdentityId id, const FamilySpec& spec, std::size_t n_max,
                      const VerifyOptions& options = {}) {
    switch (id) {
        case IdentityId::SeriesDefinition: return verify_series_def(spec, n_max);
        case IdentityId::Shift: return verify_shift(spec, n_max);
        case IdentityId::ShiftMixed: return verify_shift_mixed(spec, n_max);
        case IdentityId::DoubleIndex: return verify_double_index(spec, n_max, options.m_max.value_or(n_max));
        case IdentityId::ShiftOne: return verify_shift_one(spec, n_max);
        case IdentityId::ShiftGeneral: return verify_shift_general(spec, n_max);
        case IdentityId::Symmetry: return verify_symmetry(spec, options.c, options.d, n_max);
    }
    throw SpecError("unknown identity");
}

/// Validates the family parameters, then runs every identity once.
inline std::vector<Verdict> verify_all(const FamilySpec& spec, std::size_t n_max,
                                       const VerifyOptions& options = {}) {
    validate(spec);
    std::vector<Verdict> out;
    out.reserve(kAllIdentities.size());
    for (IdentityId id : kAllIdentities) out.push_back(verify(id, spec, n_max, options));
    return out;
}

}  // namespace apostol
