#pragma once

// Sparse structure tensors with one antisymmetric index pair.
//
// Indices are 1-based throughout. A CommutatorTensor stores c^k_{ij} of
// [X_i, X_j] = c^k_{ij} X_k, a CocommutatorTensor stores f^{lm}_n of
// eta(X_n) = f^{lm}_n X_l (x) X_m. Only the canonical orientation (first
// pair index < second) is kept; the other orientation reads back negated.
//
// Wedge convention: a^b = a(x)b - b(x)a, so eta(X_n) = v a^b (a < b) is the
// single stored component f^{ab}_n = v.

#include "lieb/scalar.hpp"

#include <array>
#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace lieb {

using Index = int;

inline void check_index(Index i, int dim) {
    if (i < 1 || i > dim)
        throw std::out_of_range("index " + std::to_string(i) + " outside 1.." + std::to_string(dim));
}

struct CommutatorTag {};
struct CocommutatorTag {};

/// Canonical stored component: (first, second) is the antisymmetric pair,
/// `free` the remaining index.
struct TensorKey {
    Index first = 0;
    Index second = 0;
    Index free = 0;
    friend auto operator<=>(const TensorKey&, const TensorKey&) = default;
};

template <class Tag>
class AntisymmetricTensor {
public:
    using Entries = std::map<TensorKey, Scalar>;

    AntisymmetricTensor() = default;
    explicit AntisymmetricTensor(int dim) : dim_(dim) {
        if (dim < 1) throw std::invalid_argument("tensor dimension must be positive");
    }

    int dim() const noexcept { return dim_; }
    const Entries& entries() const noexcept { return entries_; }
    std::size_t size() const noexcept { return entries_.size(); }
    bool is_zero() const noexcept { return entries_.empty(); }

    /// Component with the pair (i, j) antisymmetric and k free.
    Scalar get(Index i, Index j, Index k) const {
        check_index(i, dim_);
        check_index(j, dim_);
        check_index(k, dim_);
        if (i == j) return {};
        const bool swapped = i > j;
        auto it = entries_.find(swapped ? TensorKey{j, i, k} : TensorKey{i, j, k});
        if (it == entries_.end()) return {};
        return swapped ? -it->second : it->second;
    }

    void set(Index i, Index j, Index k, const Scalar& value) {
        check_index(i, dim_);
        check_index(j, dim_);
        check_index(k, dim_);
        if (i == j) {
            if (!value.is_zero())
                throw std::invalid_argument("antisymmetric pair with equal indices must be zero");
            return;
        }
        const bool swapped = i > j;
        const TensorKey key = swapped ? TensorKey{j, i, k} : TensorKey{i, j, k};
        if (value.is_zero()) {
            entries_.erase(key);
        } else {
            entries_[key] = swapped ? -value : value;
        }
    }

    void add(Index i, Index j, Index k, const Scalar& value) {
        if (value.is_zero() || i == j) return;
        set(i, j, k, get(i, j, k) + value);
    }

    /// Every nonzero component in both pair orientations.
    std::vector<std::pair<TensorKey, Scalar>> oriented_entries() const {
        std::vector<std::pair<TensorKey, Scalar>> out;
        out.reserve(2 * entries_.size());
        for (const auto& [key, v] : entries_) {
            out.emplace_back(key, v);
            out.emplace_back(TensorKey{key.second, key.first, key.free}, -v);
        }
        return out;
    }

    friend bool operator==(const AntisymmetricTensor&, const AntisymmetricTensor&) = default;

private:
    int dim_ = 1;
    Entries entries_;
};

/// c^k_{ij}; get(i, j, k).
using CommutatorTensor = AntisymmetricTensor<CommutatorTag>;
/// f^{lm}_n; get(l, m, n).
using CocommutatorTensor = AntisymmetricTensor<CocommutatorTag>;

namespace detail {
template <class To, class From>
To retag(const From& t) {
    To out(t.dim());
    for (const auto& [key, v] : t.entries()) out.set(key.first, key.second, key.free, v);
    return out;
}
}  // namespace detail

/// Reads f as the bracket of the dual space: c~^k_{ij} = f^{ij}_k.
inline CommutatorTensor transpose_roles(const CocommutatorTensor& f) {
    return detail::retag<CommutatorTensor>(f);
}

inline CocommutatorTensor transpose_roles(const CommutatorTensor& c) {
    return detail::retag<CocommutatorTensor>(c);
}

/// Sparse tensor with Rank upper indices and no symmetry imposed.
template <std::size_t Rank>
class UpperTensor {
public:
    using Key = std::array<Index, Rank>;
    using Entries = std::map<Key, Scalar>;

    UpperTensor() = default;
    explicit UpperTensor(int dim) : dim_(dim) {
        if (dim < 1) throw std::invalid_argument("tensor dimension must be positive");
    }

    int dim() const noexcept { return dim_; }
    const Entries& entries() const noexcept { return entries_; }
    bool is_zero() const noexcept { return entries_.empty(); }

    Scalar get(const Key& key) const {
        for (Index i : key) check_index(i, dim_);
        auto it = entries_.find(key);
        return it == entries_.end() ? Scalar{} : it->second;
    }

    void set(const Key& key, const Scalar& value) {
        for (Index i : key) check_index(i, dim_);
        if (value.is_zero()) {
            entries_.erase(key);
        } else {
            entries_[key] = value;
        }
    }

    void add(const Key& key, const Scalar& value) {
        if (!value.is_zero()) set(key, get(key) + value);
    }

    friend bool operator==(const UpperTensor&, const UpperTensor&) = default;

private:
    int dim_ = 1;
    Entries entries_;
};

/// Element of g (x) g: entries rho^{ij} over the full square.
class RMatrix : public UpperTensor<2> {
public:
    using UpperTensor<2>::UpperTensor;

    Scalar get(Index i, Index j) const { return UpperTensor<2>::get({i, j}); }
    void set(Index i, Index j, const Scalar& v) { UpperTensor<2>::set({i, j}, v); }

    RMatrix symmetric_part() const { return half_sum(+1); }
    RMatrix antisymmetric_part() const { return half_sum(-1); }

    /// rho^{ij} = v, rho^{ji} = -v, i.e. v X_i ^ X_j.
    static RMatrix wedge(int dim, Index i, Index j, const Scalar& v) {
        RMatrix r(dim);
        r.set(i, j, v);
        r.set(j, i, -v);
        return r;
    }

private:
    RMatrix half_sum(int sign) const {
        RMatrix out(dim());
        const Scalar half(Rational(1, 2));
        for (const auto& [key, v] : entries()) {
            out.add({key[0], key[1]}, half * v);
            out.add({key[1], key[0]}, sign > 0 ? half * v : -(half * v));
        }
        return out;
    }
};

/// Three upper indices, e.g. the Schouten bracket [[rho, rho]].
using Tensor3 = UpperTensor<3>;

}  // namespace lieb
