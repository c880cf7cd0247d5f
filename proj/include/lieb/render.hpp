#pragma once

// Text rendering of brackets and cocommutators, e.g. "[p2,P1] = -j12 + z P1".

#include "lieb/contraction.hpp"

#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace lieb {

using LinearCombination = std::vector<std::pair<std::string, Scalar>>;

inline std::string render_term(const std::string& label, const Scalar& coefficient) {
    if (coefficient == Scalar(1)) return label;
    if (coefficient == Scalar(-1)) return "-" + label;
    if (coefficient.is_monomial()) return coefficient.render() + " " + label;
    return "(" + coefficient.render() + ") " + label;
}

inline std::string render_combination(const LinearCombination& terms) {
    std::string out;
    for (const auto& [label, coefficient] : terms) {
        if (coefficient.is_zero()) continue;
        const std::string t = render_term(label, coefficient);
        if (out.empty()) {
            out = t;
        } else if (t.front() == '-') {
            out += " - " + t.substr(1);
        } else {
            out += " + " + t;
        }
    }
    return out.empty() ? "0" : out;
}

/// Terms of [e_a, e_b]; basis elements from `first` onwards are listed
/// before the rest (used to put dual generators first in a double).
template <class Tag>
LinearCombination bracket_terms(const AntisymmetricTensor<Tag>& t, const std::vector<std::string>& names, Index a,
                                Index b, Index first = 1) {
    LinearCombination terms;
    for (Index step = 0; step < t.dim(); ++step) {
        const Index k = (first - 1 + step) % t.dim() + 1;
        Scalar v = t.get(a, b, k);
        if (!v.is_zero()) terms.emplace_back(names[static_cast<std::size_t>(k - 1)], std::move(v));
    }
    return terms;
}

inline std::string render_bracket(const CommutatorTensor& c, const std::vector<std::string>& names, Index a, Index b,
                                  Index first = 1) {
    return "[" + names[static_cast<std::size_t>(a - 1)] + "," + names[static_cast<std::size_t>(b - 1)] +
           "] = " + render_combination(bracket_terms(c, names, a, b, first));
}

/// All brackets [e_a, e_b], a < b.
inline std::vector<std::string> bracket_table(const CommutatorTensor& c, const std::vector<std::string>& names) {
    std::vector<std::string> out;
    for (Index a = 1; a <= c.dim(); ++a)
        for (Index b = a + 1; b <= c.dim(); ++b) out.push_back(render_bracket(c, names, a, b));
    return out;
}

/// Brackets of a 2N double in block order: [X_i,X_j] (i<j), [x^i,x^j] (i<j),
/// then [x^i,X_j] for all i, j.
inline std::vector<std::string> double_bracket_table(const CommutatorTensor& bracket,
                                                     const std::vector<std::string>& names) {
    const int n = bracket.dim() / 2;
    std::vector<std::string> out;
    for (Index i = 1; i <= n; ++i)
        for (Index j = i + 1; j <= n; ++j) out.push_back(render_bracket(bracket, names, i, j));
    for (Index i = 1; i <= n; ++i)
        for (Index j = i + 1; j <= n; ++j) out.push_back(render_bracket(bracket, names, n + i, n + j));
    for (Index i = 1; i <= n; ++i)
        for (Index j = 1; j <= n; ++j) out.push_back(render_bracket(bracket, names, n + i, j, n + 1));
    return out;
}

inline std::vector<std::string> double_bracket_table(const DoubleAlgebra& d) {
    return double_bracket_table(d.bracket, d.names);
}

/// "eta(X) = z J12^P2 + ..." per generator, one canonical wedge per stored component.
inline std::vector<std::string> cocommutator_table(const CocommutatorTensor& f, const std::vector<std::string>& names,
                                                   const std::string& symbol = "eta") {
    std::vector<std::string> out;
    for (Index k = 1; k <= f.dim(); ++k) {
        LinearCombination terms;
        for (const auto& [key, v] : f.entries())
            if (key.free == k)
                terms.emplace_back(names[static_cast<std::size_t>(key.first - 1)] + "^" +
                                       names[static_cast<std::size_t>(key.second - 1)],
                                   v);
        out.push_back(symbol + "(" + names[static_cast<std::size_t>(k - 1)] + ") = " + render_combination(terms));
    }
    return out;
}

inline std::string render_rmatrix(const RMatrix& r, const std::vector<std::string>& names) {
    LinearCombination terms;
    for (const auto& [key, v] : r.entries())
        terms.emplace_back(names[static_cast<std::size_t>(key[0] - 1)] + "(x)" + names[static_cast<std::size_t>(key[1] - 1)], v);
    return render_combination(terms);
}

inline std::string render_exponents(const ExponentMap& m) {
    std::string out = "(";
    for (std::size_t i = 0; i < m.values().size(); ++i) {
        if (i) out += ", ";
        out += std::to_string(m.values()[i]);
    }
    return out + ")";
}

inline std::string render_indices(const std::vector<Index>& idx) {
    std::string out = "(";
    for (std::size_t i = 0; i < idx.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(idx[i]);
    }
    return out + ")";
}

inline std::vector<std::string> render_report(const DefectReport& r) {
    std::vector<std::string> out;
    if (r.ok()) {
        out.push_back(std::string(to_string(r.kind)) + ": ok");
        return out;
    }
    out.push_back(std::string(to_string(r.kind)) + ": " + std::to_string(r.violations.size()) + " violation(s)");
    for (const auto& v : r.violations) out.push_back("  " + render_indices(v.indices) + " = " + v.value.render());
    return out;
}

namespace detail {
inline const std::vector<std::string>& family_symbols() {
    static const std::vector<std::string> symbols{"α", "β", "γ", "δ", "κ", "λ", "μ", "ν", "σ", "τ"};
    return symbols;
}
}  // namespace detail

/// Parameter name for component r of a family.
inline std::string family_symbol(std::size_t r) {
    const auto& s = detail::family_symbols();
    if (r < s.size()) return s[r];
    return "s" + std::to_string(r + 1);
}

/// Renders a family with each bounded component reparametrized to start at 0:
///   n = (α, 1+α, α), α ≥ 0
inline std::vector<std::string> render_family(const ExponentFamily& family, const std::vector<std::string>& names) {
    std::vector<std::string> out;
    std::string n = "n = (";
    for (Index i = 1; i <= family.base.size(); ++i) {
        const auto r = static_cast<std::size_t>(family.component_of[static_cast<std::size_t>(i)]);
        const int offset = family.base[i] + family.lower_bounds[r].value_or(0);
        const std::string sym = family_symbol(r);
        if (i > 1) n += ", ";
        if (offset == 0) {
            n += sym;
        } else {
            n += std::to_string(offset) + "+" + sym;
        }
    }
    n += ")";
    std::vector<std::string> conditions;
    for (std::size_t r = 0; r < family.components.size(); ++r)
        conditions.push_back(family_symbol(r) + (family.lower_bounds[r] ? " ≥ 0" : " ∈ Z"));
    for (std::size_t r = 0; r < conditions.size(); ++r) n += (r == 0 ? ", " : "; ") + conditions[r];
    out.push_back(n);
    for (std::size_t r = 0; r < family.components.size(); ++r) {
        std::string line = "component " + family_symbol(r) + ": {";
        for (std::size_t k = 0; k < family.components[r].size(); ++k) {
            if (k) line += ", ";
            line += names[static_cast<std::size_t>(family.components[r][k] - 1)];
        }
        out.push_back(line + "}");
    }
    if (family.witness) {
        out.push_back("witness: n = " + render_exponents(*family.witness));
    } else {
        out.push_back("infeasible");
    }
    return out;
}

}  // namespace lieb
