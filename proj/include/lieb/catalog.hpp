#pragma once

// Built-in worked examples: the Euclidean bialgebra e(2), its double, the
// (1+1) Galilei double reached by the non-relativistic contraction, and the
// exponent maps used on them.

#include "lieb/contraction.hpp"
#include "lieb/document.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace lieb {

/// A bialgebra together with the optional data a document can carry.
struct NamedAlgebra {
    std::string name;
    LieBialgebra algebra;
    std::optional<RMatrix> rmatrix;
    std::optional<std::vector<std::string>> dual_names;
    std::vector<std::string> notes;  // printed after the double's bracket table
};

enum class EntryKind { algebra, exponent_map };

struct CatalogEntry {
    std::string key;
    std::string summary;
    EntryKind kind = EntryKind::algebra;
    // exponent maps act on the double of `target`
    std::string target;
    ExponentMap m;
    ExponentMap n;
};

namespace catalog {

/// e(2): [J12,P1] = P2, [J12,P2] = -P1, [P1,P2] = 0 with
/// eta(J12) = z J12^P2, eta(P1) = z P1^P2, eta(P2) = 0, generated by rho = z J12^P1.
inline const char* e2_document() {
    return R"({
  "name": "e2",
  "dimension": 3,
  "generators": ["J12", "P1", "P2"],
  "parameters": ["z"],
  "c": [[1, 2, 3, "1"], [1, 3, 2, "-1"]],
  "f": [[1, 3, 1, "z"], [2, 3, 2, "z"]],
  "rmatrix": [[1, 2, "z"], [2, 1, "-z"]],
  "dual_names": ["j12", "p1", "p2"]
})";
}

inline const std::vector<CatalogEntry>& entries() {
    static const std::vector<CatalogEntry> list{
        {"e2", "Euclidean Lie bialgebra e(2) with cocommutator z J12^P2, z P1^P2 and r-matrix z J12^P1",
         EntryKind::algebra, "", {}, {}},
        {"e2-double", "classical double of e2 as a 6-dimensional coboundary bialgebra", EntryKind::algebra, "", {}, {}},
        {"galilei", "(1+1) Galilei bialgebra obtained from e2 by the fundamental bicontraction at m = (1,0,1)",
         EntryKind::algebra, "", {}, {}},
        {"galilei-double", "classical double of the Galilei bialgebra (contraction of e2-double by nonrel-map)",
         EntryKind::algebra, "", {}, {}},
        {"nonrel-map", "non-relativistic limit on the double of e2: m = (1,0,1), n = (0,1,0)", EntryKind::exponent_map,
         "e2", {1, 0, 1}, {0, 1, 0}},
        {"abelianizer", "uniform map m = n = (1,1,1) on the double of e2; contracts to the abelian algebra",
         EntryKind::exponent_map, "e2", {1, 1, 1}, {1, 1, 1}},
        {"classical-limit", "m = (0,0,0), n = (1,1,1): IW contraction of the double along g, kills f",
         EntryKind::exponent_map, "e2", {0, 0, 0}, {1, 1, 1}},
        {"dual-classical-limit", "m = (1,1,1), n = (0,0,0): IW contraction along g*, kills c",
         EntryKind::exponent_map, "e2", {1, 1, 1}, {0, 0, 0}},
    };
    return list;
}

inline const CatalogEntry* find(const std::string& key) {
    for (const auto& e : entries())
        if (e.key == key) return &e;
    return nullptr;
}

inline NamedAlgebra e2() {
    const AlgebraDocument doc = parse_document(e2_document());
    NamedAlgebra out{"e2", to_bialgebra(doc), to_rmatrix(doc), doc.dual_names, {}};
    out.notes.push_back(
        "note: [p2,J12] = p1 + z J12 is derived from [x^i,X_j] = c^i_{jk} x^k - f^{ik}_j X_k; "
        "the z J12 term comes from f^{13}_1 = z");
    return out;
}

inline NamedAlgebra double_of(const NamedAlgebra& base, const std::string& name) {
    const DoubleAlgebra d = build_double(base.algebra, base.dual_names);
    return {name, double_as_bialgebra(d), canonical_rmatrix(d), std::nullopt, {}};
}

inline NamedAlgebra galilei() {
    const NamedAlgebra euclid = e2();
    const ExponentMap m{1, 0, 1};
    auto bic = fundamental_constant(euclid.algebra, m);
    auto cob = coboundary_constant(euclid.algebra, *euclid.rmatrix, m);
    return {"galilei", bic.contracted, cob.contracted, euclid.dual_names, {}};
}

inline NamedAlgebra algebra(const std::string& key) {
    if (key == "e2") return e2();
    if (key == "e2-double") return double_of(e2(), "e2-double");
    if (key == "galilei") return galilei();
    if (key == "galilei-double") return double_of(galilei(), "galilei-double");
    throw std::out_of_range("no catalog algebra '" + key + "'");
}

}  // namespace catalog
}  // namespace lieb
