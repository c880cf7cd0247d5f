#pragma once

// JSON algebra documents.
//
//   {
//     "name": "e2",
//     "dimension": 3,
//     "generators": ["J12", "P1", "P2"],
//     "parameters": ["z"],
//     "c": [[1, 2, 3, "1"], [1, 3, 2, "-1"]],        // c^k_{ij}: [i, j, k, coefficient]
//     "f": [[1, 3, 1, "z"], [2, 3, 2, "z"]],         // f^{ij}_k: [i, j, k, coefficient]
//     "rmatrix": [[1, 2, "z"], [2, 1, "-z"]],       // optional rho^{ij}: [i, j, coefficient]
//     "dual_names": ["j12", "p1", "p2"]              // optional
//   }
//
// Indices are 1-based. Each antisymmetric component may be given once, in
// either orientation. Coefficients are strings in the scalar grammar (plain
// JSON integers are accepted too).

#include "lieb/bialgebra.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace lieb {

class DocumentError : public std::runtime_error {
public:
    DocumentError(const std::string& location, const std::string& what)
        : std::runtime_error(location.empty() ? what : location + ": " + what), location_(location) {}

    const std::string& location() const noexcept { return location_; }

private:
    std::string location_;
};

struct DocumentEntry {
    Index i = 0;
    Index j = 0;
    Index k = 0;  // unused for r-matrix entries
    std::string text;
    Scalar value;
};

struct AlgebraDocument {
    std::string name;
    int dimension = 0;
    std::vector<std::string> generators;
    std::vector<std::string> parameters;
    std::vector<DocumentEntry> c_entries;
    std::vector<DocumentEntry> f_entries;
    std::optional<std::vector<DocumentEntry>> rmatrix_entries;
    std::optional<std::vector<std::string>> dual_names;
};

namespace detail {

using nlohmann::json;

inline std::vector<std::string> string_list(const json& node, const std::string& where) {
    if (!node.is_array()) throw DocumentError(where, "expected an array of strings");
    std::vector<std::string> out;
    for (std::size_t i = 0; i < node.size(); ++i) {
        if (!node[i].is_string()) throw DocumentError(where + "/" + std::to_string(i), "expected a string");
        out.push_back(node[i].get<std::string>());
    }
    return out;
}

inline Index read_index(const json& node, const std::string& where, int dim) {
    if (!node.is_number_integer()) throw DocumentError(where, "expected an integer index");
    const auto v = node.get<long long>();
    if (v < 1 || v > dim)
        throw DocumentError(where, "index " + std::to_string(v) + " out of range 1.." + std::to_string(dim));
    return static_cast<Index>(v);
}

inline std::pair<std::string, Scalar> read_coefficient(const json& node, const std::string& where,
                                                       const std::vector<std::string>& params) {
    std::string text;
    if (node.is_string()) {
        text = node.get<std::string>();
    } else if (node.is_number_integer()) {
        text = std::to_string(node.get<long long>());
    } else {
        throw DocumentError(where, "expected a coefficient string");
    }
    try {
        return {text, Scalar::parse(text, params)};
    } catch (const ParseError& e) {
        throw DocumentError(where, e.what());
    } catch (const UnknownParameterError& e) {
        throw DocumentError(where, e.what());
    }
}

inline std::vector<DocumentEntry> tensor_entries(const json& root, const std::string& field, int dim,
                                                 const std::vector<std::string>& params) {
    std::vector<DocumentEntry> out;
    if (!root.contains(field)) return out;
    const json& list = root.at(field);
    if (!list.is_array()) throw DocumentError("/" + field, "expected an array of entries");
    std::set<std::pair<std::pair<Index, Index>, Index>> seen;
    for (std::size_t n = 0; n < list.size(); ++n) {
        const std::string where = "/" + field + "/" + std::to_string(n);
        const json& e = list[n];
        if (!e.is_array() || e.size() != 4) throw DocumentError(where, "expected [i, j, k, coefficient]");
        DocumentEntry entry;
        entry.i = read_index(e[0], where + "/0", dim);
        entry.j = read_index(e[1], where + "/1", dim);
        entry.k = read_index(e[2], where + "/2", dim);
        std::tie(entry.text, entry.value) = read_coefficient(e[3], where + "/3", params);
        if (entry.i == entry.j) throw DocumentError(where, "antisymmetric pair with equal indices");
        const auto key = std::pair{std::pair{std::min(entry.i, entry.j), std::max(entry.i, entry.j)}, entry.k};
        if (!seen.insert(key).second)
            throw DocumentError(where, "duplicate entry for component (" + std::to_string(key.first.first) + "," +
                                           std::to_string(key.first.second) + "," + std::to_string(key.second) + ")");
        out.push_back(std::move(entry));
    }
    return out;
}

}  // namespace detail

inline AlgebraDocument parse_document(const std::string& text) {
    using nlohmann::json;
    json root;
    try {
        root = json::parse(text);
    } catch (const json::parse_error& e) {
        throw DocumentError("", std::string("syntax error at byte ") + std::to_string(e.byte) + ": " + e.what());
    }
    if (!root.is_object()) throw DocumentError("", "document must be a JSON object");
    AlgebraDocument doc;
    if (root.contains("name")) {
        if (!root["name"].is_string()) throw DocumentError("/name", "expected a string");
        doc.name = root["name"].get<std::string>();
    }
    if (!root.contains("dimension") || !root["dimension"].is_number_integer())
        throw DocumentError("/dimension", "expected a positive integer");
    const auto dim = root["dimension"].get<long long>();
    if (dim < 1 || dim > 4096) throw DocumentError("/dimension", "expected a positive integer");
    doc.dimension = static_cast<int>(dim);
    if (!root.contains("generators")) throw DocumentError("/generators", "missing");
    doc.generators = detail::string_list(root["generators"], "/generators");
    if (static_cast<int>(doc.generators.size()) != doc.dimension)
        throw DocumentError("/generators", "expected " + std::to_string(doc.dimension) + " names");
    if (root.contains("parameters")) doc.parameters = detail::string_list(root["parameters"], "/parameters");
    doc.c_entries = detail::tensor_entries(root, "c", doc.dimension, doc.parameters);
    doc.f_entries = detail::tensor_entries(root, "f", doc.dimension, doc.parameters);
    if (root.contains("rmatrix")) {
        const json& list = root["rmatrix"];
        if (!list.is_array()) throw DocumentError("/rmatrix", "expected an array of entries");
        std::vector<DocumentEntry> entries;
        std::set<std::pair<Index, Index>> seen;
        for (std::size_t n = 0; n < list.size(); ++n) {
            const std::string where = "/rmatrix/" + std::to_string(n);
            const json& e = list[n];
            if (!e.is_array() || e.size() != 3) throw DocumentError(where, "expected [i, j, coefficient]");
            DocumentEntry entry;
            entry.i = detail::read_index(e[0], where + "/0", doc.dimension);
            entry.j = detail::read_index(e[1], where + "/1", doc.dimension);
            std::tie(entry.text, entry.value) = detail::read_coefficient(e[2], where + "/2", doc.parameters);
            if (!seen.insert({entry.i, entry.j}).second) throw DocumentError(where, "duplicate r-matrix entry");
            entries.push_back(std::move(entry));
        }
        doc.rmatrix_entries = std::move(entries);
    }
    if (root.contains("dual_names")) {
        doc.dual_names = detail::string_list(root["dual_names"], "/dual_names");
        if (static_cast<int>(doc.dual_names->size()) != doc.dimension)
            throw DocumentError("/dual_names", "expected " + std::to_string(doc.dimension) + " names");
    }
    return doc;
}

inline AlgebraDocument load_document(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DocumentError("", "cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_document(buffer.str());
}

/// The (c, f) pair of the document without checking the axioms.
inline LieBialgebra to_structure(const AlgebraDocument& doc) {
    CommutatorTensor c(doc.dimension);
    CocommutatorTensor f(doc.dimension);
    for (const auto& e : doc.c_entries) c.set(e.i, e.j, e.k, e.value);
    for (const auto& e : doc.f_entries) f.set(e.i, e.j, e.k, e.value);
    return LieBialgebra(doc.generators, doc.parameters, std::move(c), std::move(f));
}

/// Rejects the document with the offending defects unless it is a Lie bialgebra.
inline LieBialgebra to_bialgebra(const AlgebraDocument& doc) {
    LieBialgebra b = to_structure(doc);
    auto reports = validate(b);
    if (!is_valid(reports)) throw InvalidBialgebra(std::move(reports));
    return b;
}

inline std::optional<RMatrix> to_rmatrix(const AlgebraDocument& doc) {
    if (!doc.rmatrix_entries) return std::nullopt;
    RMatrix r(doc.dimension);
    for (const auto& e : *doc.rmatrix_entries) r.set(e.i, e.j, e.value);
    return r;
}

inline nlohmann::ordered_json to_json(const std::string& name, const LieBialgebra& b,
                                      const std::optional<RMatrix>& rmatrix = {},
                                      const std::optional<std::vector<std::string>>& dual_names = {}) {
    nlohmann::ordered_json root;
    root["name"] = name;
    root["dimension"] = b.dim;
    root["generators"] = b.names;
    root["parameters"] = b.params;
    auto entries = [](const auto& tensor) {
        nlohmann::ordered_json list = nlohmann::ordered_json::array();
        for (const auto& [key, v] : tensor.entries())
            list.push_back(nlohmann::ordered_json::array({key.first, key.second, key.free, v.render()}));
        return list;
    };
    root["c"] = entries(b.c);
    root["f"] = entries(b.f);
    if (rmatrix) {
        nlohmann::ordered_json list = nlohmann::ordered_json::array();
        for (const auto& [key, v] : rmatrix->entries())
            list.push_back(nlohmann::ordered_json::array({key[0], key[1], v.render()}));
        root["rmatrix"] = list;
    }
    if (dual_names) root["dual_names"] = *dual_names;
    return root;
}

inline std::string export_document(const std::string& name, const LieBialgebra& b,
                                   const std::optional<RMatrix>& rmatrix = {},
                                   const std::optional<std::vector<std::string>>& dual_names = {}) {
    return to_json(name, b, rmatrix, dual_names).dump(2) + "\n";
}

}  // namespace lieb
