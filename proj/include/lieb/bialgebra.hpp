#pragma once

// Lie bialgebra axioms and coboundary machinery. All checks are exact and
// return the full list of nonzero defect components.

#include "lieb/tensor.hpp"

#include <algorithm>
#include <array>
#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace lieb {

enum class DefectKind { jacobi, co_jacobi, cocycle, cybe, ad_invariance };

inline std::string_view to_string(DefectKind kind) {
    switch (kind) {
        case DefectKind::jacobi: return "jacobi";
        case DefectKind::co_jacobi: return "co-jacobi";
        case DefectKind::cocycle: return "cocycle";
        case DefectKind::cybe: return "cybe";
        case DefectKind::ad_invariance: return "ad-invariance";
    }
    return "?";
}

struct Violation {
    std::vector<Index> indices;
    Scalar value;
    friend bool operator==(const Violation&, const Violation&) = default;
};

struct DefectReport {
    DefectKind kind = DefectKind::jacobi;
    std::vector<Violation> violations;

    bool ok() const noexcept { return violations.empty(); }
};

struct LieBialgebra {
    int dim = 1;
    std::vector<std::string> names;
    std::vector<std::string> params;
    CommutatorTensor c{1};
    CocommutatorTensor f{1};

    LieBialgebra() = default;
    LieBialgebra(std::vector<std::string> generator_names, std::vector<std::string> parameters,
                 CommutatorTensor commutator, CocommutatorTensor cocommutator)
        : dim(static_cast<int>(generator_names.size())),
          names(std::move(generator_names)),
          params(std::move(parameters)),
          c(std::move(commutator)),
          f(std::move(cocommutator)) {
        if (c.dim() != dim || f.dim() != dim)
            throw std::invalid_argument("structure tensors do not match the number of generators");
    }

    /// Generators named X1..XN, no parameters.
    static LieBialgebra anonymous(CommutatorTensor commutator, CocommutatorTensor cocommutator) {
        std::vector<std::string> names;
        for (int i = 1; i <= commutator.dim(); ++i) names.push_back("X" + std::to_string(i));
        return {std::move(names), {}, std::move(commutator), std::move(cocommutator)};
    }
};

class InvalidBialgebra : public std::runtime_error {
public:
    explicit InvalidBialgebra(std::vector<DefectReport> reports)
        : std::runtime_error(describe(reports)), reports_(std::move(reports)) {}

    const std::vector<DefectReport>& reports() const noexcept { return reports_; }

private:
    static std::string describe(const std::vector<DefectReport>& reports) {
        std::string out = "not a Lie bialgebra:";
        for (const auto& r : reports)
            if (!r.ok())
                out += " " + std::string(to_string(r.kind)) + " (" + std::to_string(r.violations.size()) +
                       " violations)";
        return out;
    }
    std::vector<DefectReport> reports_;
};

/// The symmetric part of rho is not ad-invariant, so the coboundary is not skew.
class NotSkewError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

namespace detail {

template <class Tag>
std::multimap<Index, std::pair<TensorKey, Scalar>> by_first(const AntisymmetricTensor<Tag>& t) {
    std::multimap<Index, std::pair<TensorKey, Scalar>> out;
    for (auto& e : t.oriented_entries()) out.emplace(e.first.first, std::move(e));
    return out;
}

template <class Key>
std::vector<Violation> nonzero(const std::map<Key, Scalar>& values) {
    std::vector<Violation> out;
    for (const auto& [key, v] : values)
        if (!v.is_zero()) out.push_back({std::vector<Index>(key.begin(), key.end()), v});
    return out;
}

}  // namespace detail

/// Cyclic sum sum_m (c^m_{ij} c^l_{mk} + c^m_{jk} c^l_{mi} + c^m_{ki} c^l_{mj}),
/// reported as (i, j, k, l) with i < j < k.
inline DefectReport check_jacobi(const CommutatorTensor& c, DefectKind kind = DefectKind::jacobi) {
    using Key4 = std::array<Index, 4>;
    // partial(i,j,k,l) = sum_m c^m_{ij} c^l_{mk}
    std::map<Key4, Scalar> partial;
    const auto index = detail::by_first(c);
    for (const auto& [k1, v1] : c.oriented_entries()) {
        auto [lo, hi] = index.equal_range(k1.free);
        for (auto it = lo; it != hi; ++it) {
            const auto& [k2, v2] = it->second;
            partial[{k1.first, k1.second, k2.second, k2.free}] += v1 * v2;
        }
    }
    auto lookup = [&](Index i, Index j, Index k, Index l) {
        auto it = partial.find({i, j, k, l});
        return it == partial.end() ? Scalar{} : it->second;
    };
    std::map<Key4, Scalar> cyclic;
    for (const auto& [key, _] : partial) {
        std::array<Index, 3> t{key[0], key[1], key[2]};
        if (t[0] == t[1] || t[1] == t[2] || t[0] == t[2]) continue;
        std::sort(t.begin(), t.end());
        const Key4 canon{t[0], t[1], t[2], key[3]};
        if (cyclic.contains(canon)) continue;
        const auto [i, j, k, l] = canon;
        cyclic[canon] = lookup(i, j, k, l) + lookup(j, k, i, l) + lookup(k, i, j, l);
    }
    return {kind, detail::nonzero(cyclic)};
}

/// f^{ab}_k c^k_{ij} - f^{ak}_i c^b_{kj} - f^{kb}_i c^a_{kj} - f^{ak}_j c^b_{ik} - f^{kb}_j c^a_{ik},
/// reported as (a, b, i, j) with a < b and i < j.
inline DefectReport check_cocycle(const CommutatorTensor& c, const CocommutatorTensor& f) {
    if (c.dim() != f.dim()) throw std::invalid_argument("cocycle check: dimension mismatch");
    using Key4 = std::array<Index, 4>;
    std::map<Key4, Scalar> total;
    const auto cs = c.oriented_entries();
    for (const auto& [fk, fv] : f.oriented_entries()) {
        for (const auto& [ck, cv] : cs) {
            const Scalar p = fv * cv;
            // f^{ab}_k c^k_{ij}
            if (fk.free == ck.free) total[{fk.first, fk.second, ck.first, ck.second}] += p;
            // f^{ak}_i c^b_{kj}: f(a,k,i), c(k,j,b)
            if (fk.second == ck.first) total[{fk.first, ck.free, fk.free, ck.second}] -= p;
            // f^{kb}_i c^a_{kj}: f(k,b,i), c(k,j,a)
            if (fk.first == ck.first) total[{ck.free, fk.second, fk.free, ck.second}] -= p;
            // f^{ak}_j c^b_{ik}: f(a,k,j), c(i,k,b)
            if (fk.second == ck.second) total[{fk.first, ck.free, ck.first, fk.free}] -= p;
            // f^{kb}_j c^a_{ik}: f(k,b,j), c(i,k,a)
            if (fk.first == ck.second) total[{ck.free, fk.second, ck.first, fk.free}] -= p;
        }
    }
    std::map<Key4, Scalar> canonical;
    for (const auto& [key, v] : total)
        if (key[0] < key[1] && key[2] < key[3]) canonical.emplace(key, v);
    return {DefectKind::cocycle, detail::nonzero(canonical)};
}

/// Jacobi of c, Jacobi of the dual bracket read from f, and the cocycle
/// condition; the pair is a Lie bialgebra iff all three are empty.
inline std::vector<DefectReport> validate(const LieBialgebra& b) {
    return {check_jacobi(b.c, DefectKind::jacobi), check_jacobi(transpose_roles(b.f), DefectKind::co_jacobi),
            check_cocycle(b.c, b.f)};
}

inline bool is_valid(const std::vector<DefectReport>& reports) {
    for (const auto& r : reports)
        if (!r.ok()) return false;
    return true;
}

inline bool is_valid(const LieBialgebra& b) { return is_valid(validate(b)); }

/// Adjoint action of each basis element X_k on every slot of T:
/// (X_k . T)^{a_1..a_R} = sum_s sum_i c^{a_s}_{k i} T^{a_1..i..a_R}.
/// Keys are (k, a_1, .., a_R).
template <std::size_t Rank>
std::map<std::array<Index, Rank + 1>, Scalar> adjoint_action(const CommutatorTensor& c,
                                                             const UpperTensor<Rank>& t) {
    if (c.dim() != t.dim()) throw std::invalid_argument("adjoint action: dimension mismatch");
    // c^{a}_{k i} indexed by i
    std::multimap<Index, std::pair<TensorKey, Scalar>> by_second;
    for (auto& e : c.oriented_entries()) by_second.emplace(e.first.second, std::move(e));
    std::map<std::array<Index, Rank + 1>, Scalar> out;
    for (const auto& [key, v] : t.entries()) {
        for (std::size_t slot = 0; slot < Rank; ++slot) {
            auto [lo, hi] = by_second.equal_range(key[slot]);
            for (auto it = lo; it != hi; ++it) {
                const auto& [ck, cv] = it->second;
                std::array<Index, Rank + 1> target{};
                target[0] = ck.first;
                for (std::size_t s = 0; s < Rank; ++s) target[s + 1] = key[s];
                target[slot + 1] = ck.free;
                out[target] += cv * v;
            }
        }
    }
    return out;
}

template <std::size_t Rank>
DefectReport check_ad_invariance(const CommutatorTensor& c, const UpperTensor<Rank>& t) {
    return {DefectKind::ad_invariance, detail::nonzero(adjoint_action(c, t))};
}

/// eta(X_k) = [1 (x) X_k + X_k (x) 1, rho], i.e.
/// f^{ab}_k = sum_i (c^a_{ki} rho^{ib} + c^b_{ki} rho^{ai}).
inline CocommutatorTensor cocommutator_from_rmatrix(const CommutatorTensor& c, const RMatrix& rho) {
    const auto action = adjoint_action<2>(c, rho);
    CocommutatorTensor f(c.dim());
    for (const auto& [key, v] : action) {
        const auto [k, a, b] = key;
        if (a == b) {
            if (!v.is_zero())
                throw NotSkewError("coboundary has a diagonal component; symmetric part of rho is not ad-invariant");
            continue;
        }
        auto mirror = action.find({k, b, a});
        const Scalar other = mirror == action.end() ? Scalar{} : mirror->second;
        if (!(v + other).is_zero())
            throw NotSkewError("coboundary is not skew; symmetric part of rho is not ad-invariant");
        if (a < b) f.set(a, b, k, v);
    }
    return f;
}

/// [[rho, rho]] = [rho12, rho13] + [rho12, rho23] + [rho13, rho23], with
/// T^{abc} = sum_{s,t} (rho^{sb} rho^{tc} c^a_{st} + rho^{as} rho^{tc} c^b_{st} + rho^{as} rho^{bt} c^c_{st}).
inline Tensor3 schouten_defect(const CommutatorTensor& c, const RMatrix& rho) {
    if (c.dim() != rho.dim()) throw std::invalid_argument("schouten bracket: dimension mismatch");
    // c^a_{st} indexed by (s, t)
    std::multimap<std::pair<Index, Index>, std::pair<Index, Scalar>> by_pair;
    for (const auto& [ck, cv] : c.oriented_entries()) by_pair.emplace(std::pair{ck.first, ck.second}, std::pair{ck.free, cv});
    Tensor3 out(c.dim());
    for (const auto& [k1, v1] : rho.entries()) {
        for (const auto& [k2, v2] : rho.entries()) {
            const Scalar p = v1 * v2;
            // rho^{sb} rho^{tc} c^a_{st}
            {
                auto [lo, hi] = by_pair.equal_range({k1[0], k2[0]});
                for (auto it = lo; it != hi; ++it) out.add({it->second.first, k1[1], k2[1]}, p * it->second.second);
            }
            // rho^{as} rho^{tc} c^b_{st}
            {
                auto [lo, hi] = by_pair.equal_range({k1[1], k2[0]});
                for (auto it = lo; it != hi; ++it) out.add({k1[0], it->second.first, k2[1]}, p * it->second.second);
            }
            // rho^{as} rho^{bt} c^c_{st}
            {
                auto [lo, hi] = by_pair.equal_range({k1[1], k2[1]});
                for (auto it = lo; it != hi; ++it) out.add({k1[0], k2[0], it->second.first}, p * it->second.second);
            }
        }
    }
    return out;
}

inline DefectReport check_cybe(const CommutatorTensor& c, const RMatrix& rho) {
    const Tensor3 t = schouten_defect(c, rho);
    std::vector<Violation> v;
    for (const auto& [key, value] : t.entries()) v.push_back({{key[0], key[1], key[2]}, value});
    return {DefectKind::cybe, std::move(v)};
}

}  // namespace lieb
