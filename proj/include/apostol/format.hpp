#pragma once

// Text forms of specs and tables: the canonical JSON document, CSV and LaTeX.
// Rationals are always written as "p" or "p/q" strings.

#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "apostol/family.hpp"

namespace apostol {

using ordered_json = nlohmann::ordered_json;

enum class OutputFormat { Json, Csv, Latex };

inline std::optional<OutputFormat> parse_format(std::string_view s) {
    if (s == "json") return OutputFormat::Json;
    if (s == "csv") return OutputFormat::Csv;
    if (s == "latex") return OutputFormat::Latex;
    return std::nullopt;
}

/// "1", "e" or "sym"; "sym" names SymbolicA for a and SymbolicB for b.
inline std::string format_log_base(LogBase base, bool is_a) {
    switch (base) {
        case LogBase::One: return "1";
        case LogBase::E: return "e";
        case LogBase::SymbolicA: return is_a ? "sym" : "symA";
        case LogBase::SymbolicB: return is_a ? "symB" : "sym";
    }
    return "?";
}

inline LogBase parse_log_base(std::string_view s, bool is_a) {
    if (s == "1") return LogBase::One;
    if (s == "e") return LogBase::E;
    if (s == "sym") return is_a ? LogBase::SymbolicA : LogBase::SymbolicB;
    if (s == "symA") return LogBase::SymbolicA;
    if (s == "symB") return LogBase::SymbolicB;
    throw SpecError("unknown base '" + std::string(s) + "' (expected 1, e or sym)");
}

/// "unit", "gould-hopper:m", "laguerre:m", "truncated-exp:beta".
inline std::string format_phi(const PhiKind& phi) {
    return std::visit(
        [](const auto& p) -> std::string {
            using P = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<P, PhiUnit>) return "unit";
            else if constexpr (std::is_same_v<P, GouldHopper>) return "gould-hopper:" + std::to_string(p.m);
            else if constexpr (std::is_same_v<P, Laguerre>) return "laguerre:" + std::to_string(p.m);
            else return "truncated-exp:" + std::to_string(p.beta);
        },
        phi);
}

/// Inverse of format_phi. A bare kind takes the preset default parameter and
/// "hermite" means gould-hopper:2.
inline PhiKind parse_phi(std::string_view s) {
    std::string kind(s.substr(0, s.find(':')));
    std::optional<unsigned> param;
    if (auto colon = s.find(':'); colon != std::string_view::npos) {
        std::string digits(s.substr(colon + 1));
        if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos) {
            throw SpecError("malformed phi parameter in '" + std::string(s) + "'");
        }
        param = static_cast<unsigned>(std::stoul(digits));
    }
    PhiKind phi;
    if (kind == "unit") {
        if (param) throw SpecError("phi 'unit' takes no parameter");
        phi = PhiUnit{};
    } else if (kind == "hermite") {
        if (param) throw SpecError("phi 'hermite' takes no parameter");
        phi = GouldHopper{2};
    } else if (kind == "gould-hopper") {
        phi = GouldHopper{param.value_or(3)};
    } else if (kind == "laguerre") {
        phi = Laguerre{param.value_or(1)};
    } else if (kind == "truncated-exp") {
        phi = TruncatedExp{param.value_or(2)};
    } else {
        throw SpecError("unknown phi '" + std::string(s) + "'");
    }
    detail::check_phi(phi);
    return phi;
}

inline ordered_json spec_to_json(const FamilySpec& spec) {
    ordered_json j;
    j["r"] = spec.r;
    j["k"] = spec.k;
    j["a"] = format_log_base(spec.a, true);
    j["b"] = format_log_base(spec.b, false);
    ordered_json alphas = ordered_json::array();
    for (const auto& q : spec.alphas) alphas.push_back(q.str());
    j["alphas"] = alphas;
    j["phi"] = format_phi(spec.phi);
    return j;
}

inline FamilySpec spec_from_json(const ordered_json& j) {
    FamilySpec spec;
    spec.r = j.at("r").get<unsigned>();
    spec.k = j.at("k").get<unsigned>();
    spec.a = parse_log_base(j.at("a").get<std::string>(), true);
    spec.b = parse_log_base(j.at("b").get<std::string>(), false);
    spec.alphas.clear();
    for (const auto& q : j.at("alphas")) spec.alphas.push_back(Rational::parse(q.get<std::string>()));
    spec.phi = parse_phi(j.at("phi").get<std::string>());
    return spec;
}

/// [{"coeff": "p/q", "x": 2, ...}] in canonical term order, zero exponents omitted.
inline ordered_json poly_to_json(const MultiPoly& p) {
    ordered_json terms = ordered_json::array();
    for (const auto& [e, c] : p.terms()) {
        ordered_json t;
        t["coeff"] = c.str();
        for (VarId v : kAllVars) {
            auto power = e[static_cast<std::size_t>(v)];
            if (power != 0) t[std::string(var_key(v))] = power;
        }
        terms.push_back(std::move(t));
    }
    return terms;
}

inline MultiPoly poly_from_json(const ordered_json& terms) {
    MultiPoly p;
    for (const auto& t : terms) {
        Exponents e{};
        for (VarId v : kAllVars) {
            auto key = std::string(var_key(v));
            if (t.contains(key)) e[static_cast<std::size_t>(v)] = t.at(key).get<std::uint32_t>();
        }
        p.add_term(e, Rational::parse(t.at("coeff").get<std::string>()));
    }
    return p;
}

/// {"spec": {...}, "entries": [...]} for family tables; tables without a spec
/// carry {"table": label} instead.
inline ordered_json table_to_json(const PolyTable& table) {
    ordered_json j;
    if (table.spec) {
        j["spec"] = spec_to_json(*table.spec);
    } else {
        j["table"] = table.label;
    }
    ordered_json entries = ordered_json::array();
    for (std::size_t n = 0; n < table.entries.size(); ++n) {
        ordered_json e;
        e["n"] = n;
        e["terms"] = poly_to_json(table.entries[n]);
        entries.push_back(std::move(e));
    }
    j["entries"] = entries;
    return j;
}

inline PolyTable table_from_json(const ordered_json& j) {
    PolyTable table;
    if (j.contains("spec")) {
        table.spec = spec_from_json(j.at("spec"));
        table.label = "unified family";
    } else {
        table.label = j.at("table").get<std::string>();
    }
    const auto& entries = j.at("entries");
    for (std::size_t i = 0; i < entries.size(); ++i) {
        if (entries[i].at("n").get<std::size_t>() != i) {
            throw std::invalid_argument("table entries must be contiguous from n = 0");
        }
        table.entries.push_back(poly_from_json(entries[i].at("terms")));
    }
    return table;
}

inline std::string render_json(const PolyTable& table) { return table_to_json(table).dump(2) + "\n"; }

inline std::string describe_spec(const FamilySpec& spec) {
    std::string alphas;
    for (const auto& q : spec.alphas) alphas += (alphas.empty() ? "" : ",") + q.str();
    return "r=" + std::to_string(spec.r) + " k=" + std::to_string(spec.k) +
           " a=" + format_log_base(spec.a, true) + " b=" + format_log_base(spec.b, false) +
           " alphas=" + alphas + " phi=" + format_phi(spec.phi);
}

inline std::string table_caption(const PolyTable& table) {
    return table.spec ? "unified family " + describe_spec(*table.spec) : table.label;
}

inline std::string render_csv(const PolyTable& table) {
    std::ostringstream os;
    os << "# " << table_caption(table) << "\n";
    os << "n, polynomial\n";
    for (std::size_t n = 0; n < table.entries.size(); ++n) os << n << ", " << table.entries[n].str() << "\n";
    return os.str();
}

/// One tabular row per n.
inline std::string render_latex(const PolyTable& table) {
    std::ostringstream os;
    os << "% " << table_caption(table) << "\n";
    os << "\\begin{tabular}{r|l}\n";
    os << "$n$ & polynomial \\\\ \\hline\n";
    for (std::size_t n = 0; n < table.entries.size(); ++n) {
        os << n << " & $" << table.entries[n].latex() << "$ \\\\\n";
    }
    os << "\\end{tabular}\n";
    return os.str();
}

inline std::string render(const PolyTable& table, OutputFormat format) {
    switch (format) {
        case OutputFormat::Json: return render_json(table);
        case OutputFormat::Csv: return render_csv(table);
        case OutputFormat::Latex: return render_latex(table);
    }
    return {};
}

}  // namespace apostol
