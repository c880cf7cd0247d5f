#pragma once

// e(2) assembled component by component, independent of the catalog document.
// Basis 1 = J12, 2 = P1, 3 = P2.

#include "lieb/double.hpp"

namespace lieb::fixtures {

inline Scalar z() { return Scalar::parameter("z"); }

inline CommutatorTensor e2_c() {
    CommutatorTensor c(3);
    c.set(1, 2, 3, 1);   // [J12,P1] = P2
    c.set(1, 3, 2, -1);  // [J12,P2] = -P1
    return c;
}

inline CocommutatorTensor e2_f() {
    CocommutatorTensor f(3);
    f.set(1, 3, 1, z());  // eta(J12) = z J12^P2
    f.set(2, 3, 2, z());  // eta(P1) = z P1^P2
    return f;
}

inline LieBialgebra e2() { return LieBialgebra({"J12", "P1", "P2"}, {"z"}, e2_c(), e2_f()); }

inline RMatrix e2_rho() { return RMatrix::wedge(3, 1, 2, z()); }

inline DoubleAlgebra e2_double() { return build_double(e2(), std::vector<std::string>{"j12", "p1", "p2"}); }

/// Index of a generator name in the e(2) double (1-based).
inline Index at(const DoubleAlgebra& d, const std::string& name) {
    for (std::size_t i = 0; i < d.names.size(); ++i)
        if (d.names[i] == name) return static_cast<Index>(i + 1);
    throw std::out_of_range(name);
}

}  // namespace lieb::fixtures
