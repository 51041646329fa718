#pragma once

// Command-line front end: `expand`, `verify` and `table`.
// Exit codes: 0 success, 1 identity failure, 2 usage or spec error.

#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "apostol/family.hpp"
#include "apostol/format.hpp"
#include "apostol/identities.hpp"

namespace apostol::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitIdentityFailure = 1;
inline constexpr int kExitUsage = 2;

struct SpecFlags {
    std::string preset = "euler";
    unsigned r = 1;
    unsigned k = 0;
    std::string alphas;
    std::string a;
    std::string b;
    std::string phi;
    CLI::Option* preset_opt = nullptr;
    CLI::Option* r_opt = nullptr;
    CLI::Option* k_opt = nullptr;
    CLI::Option* alphas_opt = nullptr;
    CLI::Option* a_opt = nullptr;
    CLI::Option* b_opt = nullptr;
    CLI::Option* phi_opt = nullptr;

    void attach(CLI::App& app) {
        preset_opt = app.add_option("--preset", preset, "Named parameter bundle (default euler)");
        r_opt = app.add_option("--r", r, "Order r (positive integer)");
        k_opt = app.add_option("--k", k, "Non-negative integer k");
        alphas_opt = app.add_option("--alphas", alphas, "Comma-separated rationals, one per order");
        a_opt = app.add_option("--a", a, "Base a: 1, e or sym");
        b_opt = app.add_option("--b", b, "Base b: 1, e or sym");
        phi_opt = app.add_option("--phi", phi,
                                 "unit | hermite | gould-hopper[:m] | laguerre[:m] | truncated-exp[:beta]");
    }

    /// Preset first, then explicit flags on top. Throws SpecError.
    [[nodiscard]] FamilySpec build() const {
        auto p = parse_preset(preset);
        if (!p) throw SpecError("unknown preset '" + preset + "'");
        FamilySpec spec = preset_spec(*p);
        if (k_opt->count() > 0) spec.k = k;
        if (a_opt->count() > 0) spec.a = parse_log_base(a, true);
        if (b_opt->count() > 0) spec.b = parse_log_base(b, false);
        if (phi_opt->count() > 0) spec.phi = parse_phi(phi);
        if (alphas_opt->count() > 0) {
            spec.alphas.clear();
            std::stringstream ss(alphas);
            std::string item;
            while (std::getline(ss, item, ',')) spec.alphas.push_back(Rational::parse(item));
            spec.r = r_opt->count() > 0 ? r : static_cast<unsigned>(spec.alphas.size());
        } else if (r_opt->count() > 0) {
            // Preset alphas are uniform; repeat them to the requested order.
            Rational alpha = spec.alphas.front();
            spec.r = r;
            spec.alphas.assign(r, alpha);
        }
        validate(spec);
        return spec;
    }
};

inline std::string format_indices(const std::vector<std::size_t>& idx) {
    if (idx.size() == 1) return "n=" + std::to_string(idx[0]);
    std::string s = "(n,m)=(";
    for (std::size_t i = 0; i < idx.size(); ++i) s += (i ? "," : "") + std::to_string(idx[i]);
    return s + ")";
}

inline void print_verdict(const Verdict& v, std::ostream& out) {
    if (v.passed) {
        out << "PASS " << identity_name(v.identity) << " n<=" << v.max_n << "\n";
        return;
    }
    const auto& ce = *v.counterexample;
    out << "FAIL " << identity_name(v.identity) << " at " << format_indices(ce.indices)
        << ": lhs = " << ce.lhs.str() << "; rhs = " << ce.rhs.str() << "\n";
}

/// The classical table behind `table --preset`.
inline PolyTable classical_table(Preset preset, unsigned r, const Rational& lambda,
                                 std::optional<unsigned> param, std::size_t n_max) {
    auto apostol = [&](ApostolKind kind, const std::string& name, const std::string& factor) {
        PolyTable t = extract_table(apostol_spec(kind, r, lambda), n_max);
        Rational inv = reduction_factor(kind, r).inverse();
        for (auto& p : t.entries) p *= inv;
        t.spec.reset();
        t.label = name + " of order " + std::to_string(r) + ", lambda=" + lambda.str() + " (= " + factor +
                  " * unified family member)";
        return t;
    };
    switch (preset) {
        case Preset::Bernoulli:
            return apostol(ApostolKind::Bernoulli, "Apostol-Bernoulli B_n(x)", "(-1)^r");
        case Preset::Euler:
            return apostol(ApostolKind::Euler, "Apostol-Euler E_n(x)", "1");
        case Preset::Genocchi:
            return apostol(ApostolKind::Genocchi, "Apostol-Genocchi G_n(x)", "2^r");
        case Preset::Hermite: {
            if (param) throw SpecError("hermite takes no --param (it is gould-hopper with m=2)");
            PolyTable t = two_variable_table(GouldHopper{2}, n_max);
            t.label = "Hermite Kampe de Feriet H_n(x,y)";
            return t;
        }
        case Preset::GouldHopper:
            return gould_hopper_table(param.value_or(3), n_max);
        case Preset::Laguerre: {
            unsigned m = param.value_or(1);
            PolyTable t = two_variable_table(Laguerre{m}, n_max);
            t.label = "2-variable generalized Laguerre " + std::to_string(m) + "L_n(y,x)";
            return t;
        }
        case Preset::TruncatedExp: {
            unsigned beta = param.value_or(2);
            PolyTable t = two_variable_table(TruncatedExp{beta}, n_max);
            t.label = "2-variable truncated exponential e_n^(" + std::to_string(beta) + ")(x,y)";
            return t;
        }
    }
    throw SpecError("unknown preset");
}

/// Runs one command line (without the program name).
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Unified Apostol-Euler/Bernoulli/Genocchi family: expansion and identity checks",
                 "apostol"};
    app.require_subcommand(1);

    std::size_t n_max = 6;
    std::string format = "csv";

    SpecFlags expand_flags;
    auto* expand = app.add_subcommand("expand", "Expand a family table");
    expand_flags.attach(*expand);
    expand->add_option("--n", n_max, "Largest index n");
    expand->add_option("--format", format, "json | csv | latex");

    SpecFlags verify_flags;
    std::string identity = "all";
    std::string c_text = "2";
    std::string d_text = "3";
    std::size_t m_max = 0;
    auto* verify_cmd = app.add_subcommand("verify", "Check identities exactly");
    verify_flags.attach(*verify_cmd);
    verify_cmd->add_option("--identity", identity,
                           "all | series-def | shift | shift-mixed | double-index | shift-one | "
                           "shift-general | symmetry");
    verify_cmd->add_option("--n", n_max, "Largest index n");
    verify_cmd->add_option("--c", c_text, "Symmetry scalar c");
    verify_cmd->add_option("--d", d_text, "Symmetry scalar d");
    auto* m_max_opt = verify_cmd->add_option("--m-max", m_max, "Second index bound for double-index");

    std::string table_preset;
    unsigned table_r = 1;
    std::string lambda_text = "1";
    unsigned param = 0;
    auto* table = app.add_subcommand("table", "Classical family table");
    table->add_option("--preset", table_preset,
                      "bernoulli | euler | genocchi | gould-hopper | hermite | laguerre | truncated-exp")
        ->required();
    table->add_option("--n", n_max, "Largest index n");
    table->add_option("--format", format, "json | csv | latex");
    table->add_option("--r", table_r, "Order of the Apostol family");
    table->add_option("--lambda", lambda_text, "Apostol parameter lambda");
    auto* param_opt = table->add_option("--param", param, "m for gould-hopper/laguerre, beta for truncated-exp");

    std::vector<std::string> argv_storage;
    argv_storage.reserve(args.size() + 1);
    argv_storage.emplace_back("apostol");
    argv_storage.insert(argv_storage.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& s : argv_storage) argv.push_back(s.data());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        auto output_format = [&]() {
            auto f = parse_format(format);
            if (!f) throw SpecError("unknown format '" + format + "'");
            return *f;
        };
        if (expand->parsed()) {
            OutputFormat f = output_format();
            out << render(extract_table(expand_flags.build(), n_max), f);
            return kExitOk;
        }
        if (verify_cmd->parsed()) {
            FamilySpec spec = verify_flags.build();
            VerifyOptions options;
            options.c = Rational::parse(c_text);
            options.d = Rational::parse(d_text);
            if (m_max_opt->count() > 0) options.m_max = m_max;
            std::vector<Verdict> verdicts;
            if (identity == "all") {
                verdicts = verify_all(spec, n_max, options);
            } else {
                auto id = parse_identity(identity);
                if (!id) throw SpecError("unknown identity '" + identity + "'");
                verdicts.push_back(verify(*id, spec, n_max, options));
            }
            out << "# " << describe_spec(spec) << "\n";
            bool all_passed = true;
            for (const auto& v : verdicts) {
                print_verdict(v, out);
                all_passed = all_passed && v.passed;
            }
            return all_passed ? kExitOk : kExitIdentityFailure;
        }
        if (table->parsed()) {
            auto p = parse_preset(table_preset);
            if (!p) throw SpecError("unknown preset '" + table_preset + "'");
            OutputFormat f = output_format();
            std::optional<unsigned> parameter;
            if (param_opt->count() > 0) parameter = param;
            out << render(classical_table(*p, table_r, Rational::parse(lambda_text), parameter, n_max), f);
            return kExitOk;
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace apostol::cli
