#pragma once

// Command-line driver. Exit codes: 0 success, 1 mathematical validation
// failure (including divergent contractions), 2 usage or parse error.

#include "lieb/catalog.hpp"
#include "lieb/render.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace lieb::cli {

enum ExitCode : int { success = 0, validation_failure = 1, usage_error = 2 };

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Catalog key or path to a JSON document. Validation is left to the caller.
inline NamedAlgebra resolve(const std::string& source) {
    if (const CatalogEntry* entry = catalog::find(source)) {
        if (entry->kind != EntryKind::algebra) throw UsageError("catalog entry '" + source + "' is an exponent map");
        return catalog::algebra(source);
    }
    if (!std::filesystem::exists(source)) throw UsageError("no catalog entry or file named '" + source + "'");
    const AlgebraDocument doc = load_document(source);
    return {doc.name.empty() ? source : doc.name, to_structure(doc), to_rmatrix(doc), doc.dual_names, {}};
}

inline ExponentMap parse_exponents(const std::string& text, int expected) {
    std::vector<int> values;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            const int v = std::stoi(item, &used);
            if (used != item.size()) throw std::invalid_argument(item);
            values.push_back(v);
        } catch (const std::exception&) {
            throw UsageError("bad exponent '" + item + "' in '" + text + "'");
        }
    }
    if (static_cast<int>(values.size()) != expected)
        throw UsageError("expected " + std::to_string(expected) + " exponents, got '" + text + "'");
    return ExponentMap(std::move(values));
}

namespace detail {

inline void print_lines(std::ostream& out, const std::vector<std::string>& lines) {
    for (const auto& l : lines) out << l << '\n';
}

inline std::string component_label(const TensorKey& key, const std::vector<std::string>& names) {
    return "[" + names[static_cast<std::size_t>(key.first - 1)] + "," + names[static_cast<std::size_t>(key.second - 1)] +
           "] -> " + names[static_cast<std::size_t>(key.free - 1)];
}

/// Validates, printing the defects and returning false on failure.
inline bool require_valid(const NamedAlgebra& a, std::ostream& out) {
    auto reports = validate(a.algebra);
    if (is_valid(reports)) return true;
    out << a.name << " is not a Lie bialgebra\n";
    for (const auto& r : reports) print_lines(out, render_report(r));
    return false;
}

inline std::string header(const NamedAlgebra& a) {
    std::string params;
    for (const auto& p : a.algebra.params) params += (params.empty() ? "" : ", ") + p;
    return "algebra: " + a.name + " (dimension " + std::to_string(a.algebra.dim) +
           (params.empty() ? "" : ", parameters: " + params) + ")";
}

inline int cmd_validate(const NamedAlgebra& a, std::ostream& out) {
    out << header(a) << '\n';
    const auto reports = validate(a.algebra);
    for (const auto& r : reports) print_lines(out, render_report(r));
    bool ok = is_valid(reports);
    if (a.rmatrix) {
        const DefectReport cybe = check_cybe(a.algebra.c, *a.rmatrix);
        if (cybe.ok()) {
            out << "cybe: ok\n";
        } else {
            const auto inv = check_ad_invariance(a.algebra.c, schouten_defect(a.algebra.c, *a.rmatrix));
            out << "cybe: " << cybe.violations.size() << " nonzero component(s), "
                << (inv.ok() ? "ad-invariant (generalized CYBE holds)" : "not ad-invariant") << '\n';
            ok = ok && inv.ok();
        }
        const auto sym = check_ad_invariance(a.algebra.c, a.rmatrix->symmetric_part());
        out << "r-matrix symmetric part: " << (sym.ok() ? "ad-invariant" : "not ad-invariant") << '\n';
        bool generates = false;
        try {
            generates = cocommutator_from_rmatrix(a.algebra.c, *a.rmatrix) == a.algebra.f;
        } catch (const NotSkewError&) {
        }
        out << "r-matrix: " << (generates ? "generates the cocommutator" : "does not generate the cocommutator")
            << '\n';
        ok = ok && sym.ok() && generates;
    }
    out << (ok ? "all checks passed" : "validation failed") << '\n';
    return ok ? success : validation_failure;
}

inline int cmd_double(const NamedAlgebra& a, const std::string& export_path, std::ostream& out) {
    if (!require_valid(a, out)) return validation_failure;
    const DoubleAlgebra d = build_double(a.algebra, a.dual_names);
    out << "double of " << a.name << " (dimension " << d.dim() << ")\n";
    print_lines(out, double_bracket_table(d));
    print_lines(out, a.notes);
    out << "r = " << render_rmatrix(canonical_rmatrix(d), d.names) << '\n';
    print_lines(out, cocommutator_table(double_cocommutator(d), d.names, "delta"));
    if (!export_path.empty()) {
        std::ofstream file(export_path);
        if (!file) throw UsageError("cannot write '" + export_path + "'");
        file << export_document(a.name + "-double", double_as_bialgebra(d), canonical_rmatrix(d));
        out << "exported to " << export_path << '\n';
    }
    return success;
}

inline int cmd_cocommutator(const NamedAlgebra& a, bool from_rmatrix, std::ostream& out) {
    out << header(a) << '\n';
    if (!from_rmatrix) {
        print_lines(out, cocommutator_table(a.algebra.f, a.algebra.names));
        return success;
    }
    if (!a.rmatrix) throw UsageError(a.name + " has no r-matrix");
    out << "rho = " << render_rmatrix(*a.rmatrix, a.algebra.names) << '\n';
    CocommutatorTensor f;
    try {
        f = cocommutator_from_rmatrix(a.algebra.c, *a.rmatrix);
    } catch (const NotSkewError& e) {
        out << e.what() << '\n';
        return validation_failure;
    }
    print_lines(out, cocommutator_table(f, a.algebra.names));
    const bool same = f == a.algebra.f;
    out << (same ? "matches the declared cocommutator" : "differs from the declared cocommutator") << '\n';
    return same ? success : validation_failure;
}

inline void print_components(const std::vector<ComponentLimit>& comps, const std::vector<std::string>& names,
                             bool with_origin, std::ostream& out) {
    for (const auto& c : comps) {
        out << "  " << component_label(c.key, names) << "  " << c.value << "  eps^" << c.exponent << "  "
            << to_string(c.status);
        if (with_origin) out << "  " << to_string(c.origin);
        out << '\n';
    }
}

inline int cmd_contract(const NamedAlgebra& a, const std::string& m_text, const std::string& n_text,
                        std::ostream& out) {
    if (!require_valid(a, out)) return validation_failure;
    const ExponentMap m = parse_exponents(m_text, a.algebra.dim);
    if (n_text.empty()) {
        const auto outcome = contract_structure(a.algebra.c, m);
        out << "contraction of " << a.name << " with m = " << render_exponents(m) << '\n';
        print_components(outcome.components, a.algebra.names, false, out);
        if (!outcome.convergent()) {
            out << "divergent\n";
            return validation_failure;
        }
        print_lines(out, bracket_table(*outcome.contracted, a.algebra.names));
        return success;
    }
    const ExponentMap n = parse_exponents(n_text, a.algebra.dim);
    const DoubleAlgebra d = build_double(a.algebra, a.dual_names);
    const auto outcome = contract_double(d, m, n);
    out << "contraction of the double of " << a.name << " with m = " << render_exponents(m)
        << ", n = " << render_exponents(n) << '\n';
    print_components(outcome.components, d.names, true, out);
    const auto report = check_double_preserving(a.algebra, m, n);
    if (report.empty()) {
        out << "double-preserving: yes\n";
    } else {
        out << "double-preserving: no\n";
        for (const auto& p : report.pairs)
            out << "  pair (" << p.i << "," << p.j << "): m_i - m_j = " << p.primal_difference
                << ", -(n_i - n_j) = " << p.dual_difference << '\n';
        for (const auto& t : report.triads)
            out << "  " << (t.tensor == BlockOrigin::commutator ? "c" : "f") << " triad (" << t.key.first << ","
                << t.key.second << "," << t.key.free << "): exponent " << t.exponent << " < 0\n";
    }
    const auto pd = pairing_exponent_defect(m, n);
    out << "pairing exponents n_i + m_i = " << render_exponents(ExponentMap(pd)) << '\n';
    if (!outcome.convergent()) {
        out << "divergent\n";
        return validation_failure;
    }
    if (is_double_shaped(*outcome.contracted)) {
        print_lines(out, double_bracket_table(*outcome.contracted, d.names));
    } else {
        print_lines(out, bracket_table(*outcome.contracted, d.names));
    }
    return success;
}

inline int cmd_solve(const NamedAlgebra& a, const std::string& m_text, std::ostream& out) {
    if (!require_valid(a, out)) return validation_failure;
    const ExponentMap m = parse_exponents(m_text, a.algebra.dim);
    ExponentFamily family;
    try {
        family = solve_dual_exponents(a.algebra, m);
    } catch (const InvalidContractionMap& e) {
        out << e.what() << '\n';
        return validation_failure;
    }
    out << "dual exponents for " << a.name << " with m = " << render_exponents(m) << '\n';
    print_lines(out, render_family(family, a.algebra.names));
    return family.witness ? success : validation_failure;
}

inline int cmd_constants(const NamedAlgebra& a, const std::string& m_text, std::ostream& out) {
    if (!require_valid(a, out)) return validation_failure;
    const ExponentMap m = parse_exponents(m_text, a.algebra.dim);
    Bicontraction bic;
    try {
        bic = fundamental_constant(a.algebra, m);
    } catch (const InvalidContractionMap& e) {
        out << e.what() << '\n';
        return validation_failure;
    }
    const auto renorm = renormalized_dual_contraction(a.algebra, m, bic.constant);
    out << "contraction constants for " << a.name << " with m = " << render_exponents(m) << '\n';
    out << "f0 = " << bic.constant << '\n';
    std::optional<CoboundaryContraction> cob;
    if (!a.rmatrix) {
        out << "c0 = n/a (no r-matrix)\n";
    } else {
        try {
            cob = coboundary_constant(a.algebra, *a.rmatrix, m);
            out << "c0 = " << cob->constant << '\n';
        } catch (const RMatrixMismatch&) {
            out << "c0 = n/a (r-matrix does not generate the cocommutator)\n";
        }
    }
    out << "t0 = " << renorm.threshold << '\n';
    print_lines(out, cocommutator_table(bic.contracted.f, a.algebra.names, "eta'"));
    if (cob) out << "rho' = " << render_rmatrix(cob->contracted, a.algebra.names) << '\n';
    return success;
}

inline int cmd_classical_limit(const NamedAlgebra& a, bool dual, std::ostream& out) {
    if (!require_valid(a, out)) return validation_failure;
    const DoubleAlgebra d = build_double(a.algebra, a.dual_names);
    const DoubleAlgebra limit = dual ? dual_classical_limit(d) : classical_limit(d);
    out << (dual ? "dual classical limit" : "classical limit") << " of the double of " << a.name << '\n';
    print_lines(out, double_bracket_table(limit));
    return success;
}

inline int cmd_catalog_list(std::ostream& out) {
    for (const auto& e : catalog::entries()) out << e.key << "  " << e.summary << '\n';
    return success;
}

inline int cmd_catalog_show(const std::string& key, std::ostream& out) {
    const CatalogEntry* entry = catalog::find(key);
    if (!entry) throw UsageError("no catalog entry '" + key + "'");
    out << "# " << entry->summary << '\n';
    if (entry->kind == EntryKind::algebra) {
        const NamedAlgebra a = catalog::algebra(key);
        out << export_document(a.name, a.algebra, a.rmatrix, a.dual_names);
        return success;
    }
    const NamedAlgebra target = catalog::algebra(entry->target);
    return cmd_contract(target, [&] {
        std::string s;
        for (int v : entry->m.values()) s += (s.empty() ? "" : ",") + std::to_string(v);
        return s;
    }(), [&] {
        std::string s;
        for (int v : entry->n.values()) s += (s.empty() ? "" : ",") + std::to_string(v);
        return s;
    }(), out);
}

}  // namespace detail

/// args excludes the program name.
inline int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Lie bialgebras, classical doubles and their contractions", "lieb"};
    app.require_subcommand(1);

    std::string source, m_text, n_text, export_path, key;
    bool use_rmatrix = false, dual = false;

    auto* validate_cmd = app.add_subcommand("validate", "check the Lie bialgebra axioms");
    validate_cmd->add_option("source", source, "catalog key or document path")->required();

    auto* double_cmd = app.add_subcommand("double", "bracket table of the classical double");
    double_cmd->add_option("source", source, "catalog key or document path")->required();
    double_cmd->add_option("--export", export_path, "write the double as a document");

    auto* cocom_cmd = app.add_subcommand("cocommutator", "cocommutator table");
    cocom_cmd->add_option("source", source, "catalog key or document path")->required();
    cocom_cmd->add_flag("--rmatrix", use_rmatrix, "derive it from the document's r-matrix");

    auto* contract_cmd = app.add_subcommand("contract", "diagonal contraction of g, or of the double with --n");
    contract_cmd->add_option("source", source, "catalog key or document path")->required();
    contract_cmd->add_option("--m", m_text, "exponents on the generators, e.g. 1,0,1")->required();
    contract_cmd->add_option("--n", n_text, "exponents on the dual generators");

    auto* solve_cmd = app.add_subcommand("solve-exponents", "dual exponents giving double-preserving contractions");
    solve_cmd->add_option("source", source, "catalog key or document path")->required();
    solve_cmd->add_option("--m", m_text, "exponents on the generators")->required();

    auto* constants_cmd = app.add_subcommand("constants", "fundamental, coboundary and renormalization constants");
    constants_cmd->add_option("source", source, "catalog key or document path")->required();
    constants_cmd->add_option("--m", m_text, "exponents on the generators")->required();

    auto* limit_cmd = app.add_subcommand("classical-limit", "IW contraction of the double along g (or g* with --dual)");
    limit_cmd->add_option("source", source, "catalog key or document path")->required();
    limit_cmd->add_flag("--dual", dual, "contract along the dual instead");

    auto* catalog_cmd = app.add_subcommand("catalog", "built-in examples");
    catalog_cmd->require_subcommand(1);
    auto* list_cmd = catalog_cmd->add_subcommand("list", "list entries");
    auto* show_cmd = catalog_cmd->add_subcommand("show", "show one entry");
    show_cmd->add_option("key", key, "entry key")->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return success;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return usage_error;
    }

    try {
        if (*list_cmd) return detail::cmd_catalog_list(out);
        if (*show_cmd) return detail::cmd_catalog_show(key, out);
        const NamedAlgebra a = resolve(source);
        if (*validate_cmd) return detail::cmd_validate(a, out);
        if (*double_cmd) return detail::cmd_double(a, export_path, out);
        if (*cocom_cmd) return detail::cmd_cocommutator(a, use_rmatrix, out);
        if (*contract_cmd) return detail::cmd_contract(a, m_text, n_text, out);
        if (*solve_cmd) return detail::cmd_solve(a, m_text, out);
        if (*constants_cmd) return detail::cmd_constants(a, m_text, out);
        if (*limit_cmd) return detail::cmd_classical_limit(a, dual, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return usage_error;
    } catch (const DocumentError& e) {
        err << "error: " << e.what() << '\n';
        return usage_error;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return usage_error;
    } catch (const InvalidBialgebra& e) {
        err << "error: " << e.what() << '\n';
        return validation_failure;
    } catch (const InvalidContractionMap& e) {
        err << "error: " << e.what() << '\n';
        return validation_failure;
    }
    return usage_error;
}

}  // namespace lieb::cli
