#pragma once

// Classical double D(g) = g + g* of a Lie bialgebra.
//
// Basis of the double: indices 1..N are the generators X_i of g, indices
// N+1..2N the dual generators x^i. Brackets:
//   [X_i, X_j] = c^k_{ij} X_k
//   [x^i, x^j] = f^{ij}_k x^k
//   [x^i, X_j] = c^i_{jk} x^k - f^{ik}_j X_k

#include "lieb/bialgebra.hpp"

#include <cctype>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace lieb {

struct DoubleAlgebra {
    LieBialgebra base;
    CommutatorTensor bracket{2};
    /// 2N labels: base names followed by dual names.
    std::vector<std::string> names;

    int half() const noexcept { return base.dim; }
    int dim() const noexcept { return 2 * base.dim; }
    Index dual(Index i) const noexcept { return base.dim + i; }

    friend bool operator==(const DoubleAlgebra& a, const DoubleAlgebra& b) {
        return a.base.names == b.base.names && a.base.params == b.base.params && a.base.c == b.base.c &&
               a.base.f == b.base.f && a.bracket == b.bracket && a.names == b.names;
    }
};

/// Lowercases each name: J12 -> j12.
inline std::vector<std::string> derived_dual_names(const std::vector<std::string>& names) {
    std::vector<std::string> out;
    out.reserve(names.size());
    for (auto n : names) {
        for (char& ch : n) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
        out.push_back(std::move(n));
    }
    return out;
}

/// Assembles the 2N bracket tensor without checking the bialgebra axioms.
inline CommutatorTensor double_bracket_tensor(const CommutatorTensor& c, const CocommutatorTensor& f) {
    if (c.dim() != f.dim()) throw std::invalid_argument("double: dimension mismatch");
    const int n = c.dim();
    CommutatorTensor out(2 * n);
    for (const auto& [key, v] : c.entries()) out.set(key.first, key.second, key.free, v);
    for (const auto& [key, v] : f.entries()) out.set(n + key.first, n + key.second, n + key.free, v);
    // c^i_{jk} x^k in [x^i, X_j]; oriented entry (j, k, i)
    for (const auto& [key, v] : c.oriented_entries()) out.add(n + key.free, key.first, n + key.second, v);
    // -f^{ik}_j X_k in [x^i, X_j]; oriented entry (i, k, j)
    for (const auto& [key, v] : f.oriented_entries()) out.add(n + key.first, key.free, key.second, -v);
    return out;
}

/// Refuses to build from a pair that fails any bialgebra axiom.
inline DoubleAlgebra build_double(const LieBialgebra& b, std::optional<std::vector<std::string>> dual_names = {}) {
    auto reports = validate(b);
    if (!is_valid(reports)) throw InvalidBialgebra(std::move(reports));
    DoubleAlgebra d;
    d.base = b;
    d.bracket = double_bracket_tensor(b.c, b.f);
    d.names = b.names;
    auto duals = dual_names ? *dual_names : derived_dual_names(b.names);
    if (static_cast<int>(duals.size()) != b.dim) throw std::invalid_argument("dual name count does not match dimension");
    d.names.insert(d.names.end(), duals.begin(), duals.end());
    return d;
}

/// <X_i, X_j> = 0, <x^i, x^j> = 0, <x^i, X_j> = <X_j, x^i> = delta^i_j.
inline Scalar pairing(const DoubleAlgebra& d, Index a, Index b) {
    check_index(a, d.dim());
    check_index(b, d.dim());
    const int n = d.half();
    if ((a <= n) == (b <= n)) return {};
    return (a > n ? a - n : a) == (b > n ? b - n : b) ? Scalar(1) : Scalar{};
}

/// r = X_i (x) x^i.
inline RMatrix canonical_rmatrix(const DoubleAlgebra& d) {
    RMatrix r(d.dim());
    for (Index i = 1; i <= d.half(); ++i) r.set(i, d.dual(i), 1);
    return r;
}

/// Coboundary of the canonical r-matrix in closed form:
///   delta(X_i) = f^{jk}_i X_j (x) X_k,   delta(x^i) = -c^i_{jk} x^j (x) x^k.
/// The dual block carries the opposite cobracket of g*.
inline CocommutatorTensor double_cocommutator(const DoubleAlgebra& d) {
    const int n = d.half();
    CocommutatorTensor delta(d.dim());
    for (const auto& [key, v] : d.base.f.entries()) delta.set(key.first, key.second, key.free, v);
    for (const auto& [key, v] : d.base.c.entries()) delta.set(n + key.first, n + key.second, n + key.free, -v);
    return delta;
}

inline LieBialgebra double_as_bialgebra(const DoubleAlgebra& d) {
    return LieBialgebra(d.names, d.base.params, d.bracket, double_cocommutator(d));
}

/// Reads (c, f) back from the blocks of a 2N tensor: c from the X-block,
/// f^{ij}_k from [x^i, x^j] = f^{ij}_k x^k.
inline std::pair<CommutatorTensor, CocommutatorTensor> read_blocks(const CommutatorTensor& whole) {
    if (whole.dim() % 2 != 0) throw std::invalid_argument("double tensor must have even dimension");
    const int n = whole.dim() / 2;
    CommutatorTensor c(n);
    CocommutatorTensor f(n);
    for (const auto& [key, v] : whole.entries()) {
        if (key.second <= n && key.free <= n) c.set(key.first, key.second, key.free, v);
        if (key.first > n && key.free > n) f.set(key.first - n, key.second - n, key.free - n, v);
    }
    return {c, f};
}

/// True when the tensor is exactly the double bracket of its own blocks.
inline bool is_double_shaped(const CommutatorTensor& whole) {
    if (whole.dim() % 2 != 0) return false;
    auto [c, f] = read_blocks(whole);
    return double_bracket_tensor(c, f) == whole;
}

/// Recovers a DoubleAlgebra from its bialgebra form (inverse of double_as_bialgebra).
inline DoubleAlgebra split_double(const LieBialgebra& whole) {
    if (whole.dim % 2 != 0) throw std::invalid_argument("a double has even dimension");
    const int n = whole.dim / 2;
    auto [c, f] = read_blocks(whole.c);
    std::vector<std::string> names(whole.names.begin(), whole.names.begin() + n);
    std::vector<std::string> duals(whole.names.begin() + n, whole.names.end());
    DoubleAlgebra d = build_double(LieBialgebra(std::move(names), whole.params, std::move(c), std::move(f)), duals);
    if (!(d.bracket == whole.c)) throw std::invalid_argument("bracket is not the double of its blocks");
    if (!(double_cocommutator(d) == whole.f))
        throw std::invalid_argument("cocommutator is not the canonical coboundary of the double");
    return d;
}

}  // namespace lieb
