#pragma once

// Diagonal contractions phi_eps(e_i) = eps^{m_i} e_i of Lie algebras,
// bialgebras, r-matrices and classical doubles.
//
// Under such a map a structure constant c^k_{ij} picks up the factor
// eps^{m_i + m_j - m_k}; the eps -> 0 limit keeps it (exponent 0), kills it
// (exponent > 0) or diverges (exponent < 0). Exponents are integers;
// non-negative maps are generalized Inonu-Wigner contractions, negative
// entries give Doebner-Melsheimer maps.

#include "lieb/double.hpp"

#include <algorithm>
#include <array>
#include <cstddef>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace lieb {

class ExponentMap {
public:
    ExponentMap() = default;
    explicit ExponentMap(std::vector<int> exponents) : values_(std::move(exponents)) {}
    ExponentMap(std::initializer_list<int> exponents) : values_(exponents) {}

    static ExponentMap uniform(int dim, int value) { return ExponentMap(std::vector<int>(dim, value)); }

    /// (m, n) acting on a double: m on X_i, n on x^i.
    static ExponentMap concat(const ExponentMap& m, const ExponentMap& n) {
        std::vector<int> v = m.values_;
        v.insert(v.end(), n.values_.begin(), n.values_.end());
        return ExponentMap(std::move(v));
    }

    int size() const noexcept { return static_cast<int>(values_.size()); }
    /// 1-based.
    int operator[](Index i) const { return values_.at(static_cast<std::size_t>(i - 1)); }
    const std::vector<int>& values() const noexcept { return values_; }

    ExponentMap negated() const {
        std::vector<int> v = values_;
        for (int& x : v) x = -x;
        return ExponentMap(std::move(v));
    }

    friend bool operator==(const ExponentMap&, const ExponentMap&) = default;

private:
    std::vector<int> values_;
};

class InvalidContractionMap : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class LimitStatus { kept, vanished, divergent };

/// Which bracket of the double a component belongs to.
enum class BlockOrigin {
    none,
    commutator,          // [X_i, X_j] -> X_k
    cocommutator,        // [x^i, x^j] -> x^k
    mixed_commutator,    // [x^i, X_j] -> x^k, carries c
    mixed_cocommutator,  // [x^i, X_j] -> X_k, carries f
};

inline std::string_view to_string(LimitStatus s) {
    switch (s) {
        case LimitStatus::kept: return "kept";
        case LimitStatus::vanished: return "vanished";
        case LimitStatus::divergent: return "divergent";
    }
    return "?";
}

inline std::string_view to_string(BlockOrigin o) {
    switch (o) {
        case BlockOrigin::none: return "-";
        case BlockOrigin::commutator: return "c (primal)";
        case BlockOrigin::cocommutator: return "f (dual)";
        case BlockOrigin::mixed_commutator: return "c (mixed)";
        case BlockOrigin::mixed_cocommutator: return "f (mixed)";
    }
    return "?";
}

struct ComponentLimit {
    TensorKey key;
    Scalar value;
    int exponent = 0;
    LimitStatus status = LimitStatus::kept;
    BlockOrigin origin = BlockOrigin::none;
};

template <class Tag>
struct ContractionOutcome {
    std::vector<ComponentLimit> components;
    /// Present iff no component diverges.
    std::optional<AntisymmetricTensor<Tag>> contracted;

    bool convergent() const noexcept { return contracted.has_value(); }

    std::vector<ComponentLimit> with_status(LimitStatus s) const {
        std::vector<ComponentLimit> out;
        for (const auto& c : components)
            if (c.status == s) out.push_back(c);
        return out;
    }
};

inline LimitStatus limit_status(int exponent) {
    if (exponent == 0) return LimitStatus::kept;
    return exponent > 0 ? LimitStatus::vanished : LimitStatus::divergent;
}

/// Applies eps^{exponent(key)} to every stored component and takes eps -> 0.
template <class Tag, class ExponentFn, class OriginFn>
ContractionOutcome<Tag> contract_components(const AntisymmetricTensor<Tag>& t, ExponentFn exponent, OriginFn origin) {
    ContractionOutcome<Tag> out;
    AntisymmetricTensor<Tag> result(t.dim());
    bool divergent = false;
    for (const auto& [key, v] : t.entries()) {
        const int e = exponent(key);
        const LimitStatus s = limit_status(e);
        out.components.push_back({key, v, e, s, origin(key)});
        if (s == LimitStatus::kept) result.set(key.first, key.second, key.free, v);
        divergent = divergent || s == LimitStatus::divergent;
    }
    if (!divergent) out.contracted = std::move(result);
    return out;
}

inline void check_length(const ExponentMap& m, int dim) {
    if (m.size() != dim)
        throw std::invalid_argument("exponent map has " + std::to_string(m.size()) + " entries, expected " +
                                    std::to_string(dim));
}

/// c'^k_{ij} = lim eps^{m_i + m_j - m_k} c^k_{ij}.
inline ContractionOutcome<CommutatorTag> contract_structure(const CommutatorTensor& c, const ExponentMap& m) {
    check_length(m, c.dim());
    return contract_components(
        c, [&](const TensorKey& k) { return m[k.first] + m[k.second] - m[k.free]; },
        [](const TensorKey&) { return BlockOrigin::none; });
}

inline BlockOrigin block_origin(const TensorKey& key, int half) {
    if (key.second <= half) return BlockOrigin::commutator;
    if (key.first > half) return BlockOrigin::cocommutator;
    return key.free > half ? BlockOrigin::mixed_commutator : BlockOrigin::mixed_cocommutator;
}

/// Contracts the double bracket with m on the X_i and n on the x^i.
inline ContractionOutcome<CommutatorTag> contract_double(const DoubleAlgebra& d, const ExponentMap& m,
                                                        const ExponentMap& n) {
    check_length(m, d.half());
    check_length(n, d.half());
    const ExponentMap all = ExponentMap::concat(m, n);
    const int half = d.half();
    return contract_components(
        d.bracket, [&](const TensorKey& k) { return all[k.first] + all[k.second] - all[k.free]; },
        [half](const TensorKey& k) { return block_origin(k, half); });
}

inline ContractionOutcome<CommutatorTag> contract_double_blocks(const LieBialgebra& b, const ExponentMap& m,
                                                               const ExponentMap& n) {
    return contract_double(build_double(b), m, n);
}

/// Rebuilds a DoubleAlgebra from a contracted bracket when it is the double
/// of its own blocks.
inline std::optional<DoubleAlgebra> as_double(const DoubleAlgebra& original, const CommutatorTensor& contracted) {
    if (!is_double_shaped(contracted)) return std::nullopt;
    auto [c, f] = read_blocks(contracted);
    const std::vector<std::string> duals(original.names.begin() + original.half(), original.names.end());
    LieBialgebra base(original.base.names, original.base.params, std::move(c), std::move(f));
    if (!is_valid(base)) return std::nullopt;
    return build_double(base, duals);
}

struct PairViolation {
    Index i = 0;
    Index j = 0;
    int primal_difference = 0;  // m_i - m_j
    int dual_difference = 0;    // -(n_i - n_j)
};

struct TriadViolation {
    BlockOrigin tensor = BlockOrigin::commutator;  // commutator (m-side) or cocommutator (n-side)
    TensorKey key;
    int exponent = 0;
};

struct DoublePreservingReport {
    std::vector<PairViolation> pairs;
    std::vector<TriadViolation> triads;

    bool empty() const noexcept { return pairs.empty() && triads.empty(); }
};

namespace detail {

/// Index sets {i, j, k} of every nonzero c^k_{ij} and f^{ij}_k.
inline std::vector<std::array<Index, 3>> supporting_triads(const LieBialgebra& b) {
    std::vector<std::array<Index, 3>> out;
    for (const auto& [key, _] : b.c.entries()) out.push_back({key.first, key.second, key.free});
    for (const auto& [key, _] : b.f.entries()) out.push_back({key.first, key.second, key.free});
    return out;
}

class DisjointSets {
public:
    explicit DisjointSets(int n) : parent_(static_cast<std::size_t>(n)) {
        std::iota(parent_.begin(), parent_.end(), 0);
    }
    int find(int x) {
        while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
        return x;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) parent_[std::max(a, b)] = std::min(a, b);
    }

private:
    std::vector<int> parent_;
};

}  // namespace detail

/// Conditions for the contracted double to be again a classical double:
///   m_i - m_j = -(n_i - n_j) for every pair of indices sharing a nonzero
///   component of c or f, and
///   m_i + m_j - m_k >= 0 on nonzero c^k_{ij}, n_i + n_j - n_k >= 0 on nonzero f^{ij}_k.
/// Each nonzero component appears in three brackets of the double; the
/// pair condition is imposed on all three index pairs of its triad.
inline DoublePreservingReport check_double_preserving(const LieBialgebra& b, const ExponentMap& m,
                                                      const ExponentMap& n) {
    check_length(m, b.dim);
    check_length(n, b.dim);
    DoublePreservingReport report;
    std::set<std::pair<Index, Index>> pairs;
    for (const auto& t : detail::supporting_triads(b))
        for (int p = 0; p < 3; ++p)
            for (int q = p + 1; q < 3; ++q)
                if (t[p] != t[q]) pairs.insert({std::min(t[p], t[q]), std::max(t[p], t[q])});
    for (const auto& [i, j] : pairs) {
        const int lhs = m[i] - m[j];
        const int rhs = -(n[i] - n[j]);
        if (lhs != rhs) report.pairs.push_back({i, j, lhs, rhs});
    }
    for (const auto& [key, _] : b.c.entries()) {
        const int e = m[key.first] + m[key.second] - m[key.free];
        if (e < 0) report.triads.push_back({BlockOrigin::commutator, key, e});
    }
    for (const auto& [key, _] : b.f.entries()) {
        const int e = n[key.first] + n[key.second] - n[key.free];
        if (e < 0) report.triads.push_back({BlockOrigin::cocommutator, key, e});
    }
    return report;
}

/// sum_r coefficients[r] * s_r >= bound
struct ShiftConstraint {
    std::vector<int> coefficients;
    int bound = 0;
};

/// All dual exponent maps n making (m, n) double-preserving:
/// n_i = -m_i + s_{r(i)}, one integer shift per connected component of the
/// index graph, subject to the linear constraints on the shifts.
struct ExponentFamily {
    std::vector<std::vector<Index>> components;
    std::vector<int> component_of;  // 1-based index -> component id
    ExponentMap base;
    std::vector<ShiftConstraint> constraints;
    /// Tightest lower bound per component; nullopt when unconstrained.
    std::vector<std::optional<int>> lower_bounds;
    /// Lexicographically minimal feasible shifts (unconstrained components at 0).
    std::optional<ExponentMap> witness;
    std::vector<int> witness_shifts;

    int component_count() const noexcept { return static_cast<int>(components.size()); }

    ExponentMap member(const std::vector<int>& shifts) const {
        std::vector<int> n = base.values();
        for (std::size_t i = 0; i < n.size(); ++i) n[i] += shifts.at(static_cast<std::size_t>(component_of[i + 1]));
        return ExponentMap(std::move(n));
    }

    bool feasible(const std::vector<int>& shifts) const {
        for (const auto& c : constraints) {
            long long lhs = 0;
            for (std::size_t r = 0; r < shifts.size(); ++r) lhs += 1LL * c.coefficients[r] * shifts[r];
            if (lhs < c.bound) return false;
        }
        return true;
    }

    /// Membership of an arbitrary n.
    bool contains(const ExponentMap& n) const {
        if (n.size() != base.size()) return false;
        std::vector<std::optional<int>> shifts(components.size());
        for (Index i = 1; i <= n.size(); ++i) {
            const int s = n[i] - base[i];
            auto& slot = shifts[static_cast<std::size_t>(component_of[i])];
            if (slot && *slot != s) return false;
            slot = s;
        }
        std::vector<int> plain;
        for (const auto& s : shifts) plain.push_back(*s);
        return feasible(plain);
    }
};

namespace detail {

inline std::vector<ComponentLimit> divergent_components(const CommutatorTensor& c, const ExponentMap& m) {
    return contract_structure(c, m).with_status(LimitStatus::divergent);
}

inline void require_contraction(const CommutatorTensor& c, const ExponentMap& m) {
    const auto bad = divergent_components(c, m);
    if (!bad.empty()) {
        const auto& k = bad.front().key;
        throw InvalidContractionMap("exponent map diverges on c^" + std::to_string(k.free) + "_{" +
                                    std::to_string(k.first) + std::to_string(k.second) + "} (exponent " +
                                    std::to_string(bad.front().exponent) + ")");
    }
}

inline int ceil_div(int a, int b) {
    int q = a / b;
    if ((a % b != 0) && ((a < 0) == (b < 0))) ++q;
    return q;
}

}  // namespace detail

inline ExponentFamily solve_dual_exponents(const LieBialgebra& b, const ExponentMap& m) {
    check_length(m, b.dim);
    detail::require_contraction(b.c, m);

    detail::DisjointSets sets(b.dim + 1);
    for (const auto& t : detail::supporting_triads(b)) {
        sets.unite(t[0], t[1]);
        sets.unite(t[0], t[2]);
    }

    ExponentFamily family;
    family.base = m.negated();
    family.component_of.assign(static_cast<std::size_t>(b.dim + 1), -1);
    for (Index i = 1; i <= b.dim; ++i) {
        const int root = sets.find(i);
        if (family.component_of[static_cast<std::size_t>(root)] < 0) {
            family.component_of[static_cast<std::size_t>(root)] = family.component_count();
            family.components.emplace_back();
        }
        const int id = family.component_of[static_cast<std::size_t>(root)];
        family.component_of[static_cast<std::size_t>(i)] = id;
        family.components[static_cast<std::size_t>(id)].push_back(i);
    }
    const auto comps = static_cast<std::size_t>(family.component_count());

    // n_i + n_j - n_k >= 0 on every nonzero f^{ij}_k
    for (const auto& [key, _] : b.f.entries()) {
        ShiftConstraint con{std::vector<int>(comps, 0), 0};
        con.coefficients[static_cast<std::size_t>(family.component_of[key.first])] += 1;
        con.coefficients[static_cast<std::size_t>(family.component_of[key.second])] += 1;
        con.coefficients[static_cast<std::size_t>(family.component_of[key.free])] -= 1;
        con.bound = m[key.first] + m[key.second] - m[key.free];
        family.constraints.push_back(std::move(con));
    }

    family.lower_bounds.assign(comps, std::nullopt);
    bool infeasible = false;
    for (const auto& con : family.constraints) {
        int var = -1;
        for (std::size_t r = 0; r < comps; ++r) {
            if (con.coefficients[r] == 0) continue;
            if (var >= 0) throw std::logic_error("shift constraint couples two components");
            var = static_cast<int>(r);
        }
        if (var < 0) {
            infeasible = infeasible || con.bound > 0;
            continue;
        }
        const int coeff = con.coefficients[static_cast<std::size_t>(var)];
        if (coeff < 0) throw std::logic_error("shift constraint with negative coefficient");
        const int bound = detail::ceil_div(con.bound, coeff);
        auto& lb = family.lower_bounds[static_cast<std::size_t>(var)];
        lb = lb ? std::max(*lb, bound) : bound;
    }
    if (!infeasible) {
        family.witness_shifts.assign(comps, 0);
        for (std::size_t r = 0; r < comps; ++r)
            if (family.lower_bounds[r]) family.witness_shifts[r] = *family.lower_bounds[r];
        family.witness = family.member(family.witness_shifts);
    }
    return family;
}

struct Bicontraction {
    int constant = 0;
    LieBialgebra contracted;
};

/// f0 = max(0, max over nonzero f^{jk}_i of m_j + m_k - m_i). The contracted
/// cocommutator keeps exactly the components whose exponent equals f0.
inline Bicontraction fundamental_constant(const LieBialgebra& b, const ExponentMap& m) {
    check_length(m, b.dim);
    detail::require_contraction(b.c, m);
    int f0 = 0;
    for (const auto& [key, _] : b.f.entries()) f0 = std::max(f0, m[key.first] + m[key.second] - m[key.free]);
    CocommutatorTensor fc(b.dim);
    for (const auto& [key, v] : b.f.entries())
        if (m[key.first] + m[key.second] - m[key.free] == f0) fc.set(key.first, key.second, key.free, v);
    return {f0, LieBialgebra(b.names, b.params, *contract_structure(b.c, m).contracted, std::move(fc))};
}

class RMatrixMismatch : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct CoboundaryContraction {
    int constant = 0;
    RMatrix contracted;
};

/// c0 = max(0, max over nonzero rho^{ij} of m_i + m_j); the contracted
/// r-matrix keeps the components whose exponent equals c0.
inline CoboundaryContraction coboundary_constant(const LieBialgebra& b, const RMatrix& rho, const ExponentMap& m) {
    check_length(m, b.dim);
    if (!(cocommutator_from_rmatrix(b.c, rho) == b.f))
        throw RMatrixMismatch("r-matrix does not generate the cocommutator");
    detail::require_contraction(b.c, m);
    int c0 = 0;
    for (const auto& [key, _] : rho.entries()) c0 = std::max(c0, m[key[0]] + m[key[1]]);
    RMatrix out(b.dim);
    for (const auto& [key, v] : rho.entries())
        if (m[key[0]] + m[key[1]] == c0) out.set(key[0], key[1], v);
    return {c0, std::move(out)};
}

/// n_i + m_i; all zero iff <phi(x^i), phi(X_j)> = delta^i_j is preserved.
inline std::vector<int> pairing_exponent_defect(const ExponentMap& m, const ExponentMap& n) {
    if (m.size() != n.size()) throw std::invalid_argument("exponent maps differ in length");
    std::vector<int> out;
    for (Index i = 1; i <= m.size(); ++i) out.push_back(n[i] + m[i]);
    return out;
}

struct RenormalizedContraction {
    ContractionOutcome<CocommutatorTag> outcome;
    int threshold = 0;  // t0
};

/// Pairing-preserving dual map n = -m with renormalization eps^N on f:
/// f'^{ij}_k = lim eps^{n_i + n_j - n_k + N} f^{ij}_k. t0 is the smallest N
/// without divergence and coincides with f0.
inline RenormalizedContraction renormalized_dual_contraction(const LieBialgebra& b, const ExponentMap& m, int shift) {
    check_length(m, b.dim);
    const ExponentMap n = m.negated();
    RenormalizedContraction out;
    out.outcome = contract_components(
        b.f, [&](const TensorKey& k) { return n[k.first] + n[k.second] - n[k.free] + shift; },
        [](const TensorKey&) { return BlockOrigin::cocommutator; });
    int t0 = 0;
    for (const auto& [key, _] : b.f.entries()) t0 = std::max(t0, m[key.first] + m[key.second] - m[key.free]);
    out.threshold = t0;
    if (contract_structure(b.c, m).convergent() && fundamental_constant(b, m).constant != t0)
        throw std::logic_error("renormalization threshold differs from the fundamental constant");
    return out;
}

namespace detail {
inline DoubleAlgebra contract_to_double(const DoubleAlgebra& d, const ExponentMap& m, const ExponentMap& n) {
    auto outcome = contract_double(d, m, n);
    if (!outcome.convergent()) throw InvalidContractionMap("contraction of the double diverges");
    auto result = as_double(d, *outcome.contracted);
    if (!result) throw std::logic_error("contracted algebra is not a classical double");
    return *result;
}
}  // namespace detail

/// phi(X_i) = X_i, phi(x^i) = eps x^i: kills f, leaving the double of (g, 0).
inline DoubleAlgebra classical_limit(const DoubleAlgebra& d) {
    return detail::contract_to_double(d, ExponentMap::uniform(d.half(), 0), ExponentMap::uniform(d.half(), 1));
}

/// phi(X_i) = eps X_i, phi(x^i) = x^i: kills c.
inline DoubleAlgebra dual_classical_limit(const DoubleAlgebra& d) {
    return detail::contract_to_double(d, ExponentMap::uniform(d.half(), 1), ExponentMap::uniform(d.half(), 0));
}

}  // namespace lieb
