#include "support/fixtures.hpp"
#include "support/oracles.hpp"
#include "support/random_bialgebra.hpp"

#include <gtest/gtest.h>

namespace lieb {
namespace {

using fixtures::z;
using Defects = std::map<oracle::Key4, Scalar>;

Defects as_map(const DefectReport& r) {
    Defects out;
    for (const auto& v : r.violations) {
        EXPECT_EQ(v.indices.size(), 4u);
        EXPECT_FALSE(v.value.is_zero());
        out[{v.indices[0], v.indices[1], v.indices[2], v.indices[3]}] = v.value;
    }
    return out;
}

TEST(Jacobi, E2AndAbelianAreLie) {
    EXPECT_TRUE(check_jacobi(fixtures::e2_c()).ok());
    EXPECT_TRUE(check_jacobi(CommutatorTensor(4)).ok());
}

TEST(Jacobi, PerturbedExampleHasDefect) {
    CommutatorTensor c(3);
    c.set(1, 2, 1, 1);
    c.set(1, 3, 2, 1);
    c.set(2, 3, 1, 1);
    const Defects expected{{{1, 2, 3, 2}, Scalar(1)}};
    EXPECT_EQ(oracle::jacobi(c), expected);
    EXPECT_EQ(as_map(check_jacobi(c)), expected);
    EXPECT_EQ(check_jacobi(c).kind, DefectKind::jacobi);
}

TEST(Cocycle, E2AndTrivialCocommutator) {
    EXPECT_TRUE(check_cocycle(fixtures::e2_c(), fixtures::e2_f()).ok());
    EXPECT_TRUE(check_cocycle(fixtures::e2_c(), CocommutatorTensor(3)).ok());
}

TEST(Cocycle, SingleComponentCocommutatorFails) {
    CocommutatorTensor f(3);
    f.set(1, 2, 3, z());
    const Defects expected{{{1, 2, 1, 2}, z()}, {{1, 3, 1, 3}, -z()}, {{2, 3, 2, 3}, -z()}};
    EXPECT_EQ(oracle::cocycle(fixtures::e2_c(), f), expected);
    EXPECT_EQ(as_map(check_cocycle(fixtures::e2_c(), f)), expected);
}

TEST(Cocycle, DimensionMismatchThrows) {
    EXPECT_THROW(check_cocycle(CommutatorTensor(3), CocommutatorTensor(2)), std::invalid_argument);
}

TEST(Validate, E2AndZeroPairsAreValid) {
    const auto reports = validate(fixtures::e2());
    ASSERT_EQ(reports.size(), 3u);
    EXPECT_EQ(reports[0].kind, DefectKind::jacobi);
    EXPECT_EQ(reports[1].kind, DefectKind::co_jacobi);
    EXPECT_EQ(reports[2].kind, DefectKind::cocycle);
    EXPECT_TRUE(is_valid(reports));
    for (int n = 1; n <= 5; ++n) EXPECT_TRUE(is_valid(LieBialgebra::anonymous(CommutatorTensor(n), CocommutatorTensor(n))));
}

TEST(Validate, FlippedSignBreaksCocycle) {
    auto f = fixtures::e2_f();
    f.set(2, 3, 2, -z());
    const auto reports = validate(LieBialgebra({"J12", "P1", "P2"}, {"z"}, fixtures::e2_c(), f));
    EXPECT_TRUE(reports[0].ok());
    EXPECT_TRUE(reports[1].ok());
    const Defects expected{{{2, 3, 1, 3}, Scalar(2) * z()}};
    EXPECT_EQ(as_map(reports[2]), expected);
}

TEST(Validate, CoJacobiUsesTransposedCocommutator) {
    CocommutatorTensor f(3);
    f.set(1, 2, 1, 1);
    f.set(1, 3, 2, 1);
    f.set(2, 3, 1, 1);
    const auto reports = validate(LieBialgebra::anonymous(CommutatorTensor(3), f));
    EXPECT_TRUE(reports[0].ok());
    EXPECT_EQ(reports[1].kind, DefectKind::co_jacobi);
    EXPECT_FALSE(reports[1].ok());
}

TEST(RMatrix, CoboundaryOfE2Rho) {
    EXPECT_EQ(cocommutator_from_rmatrix(fixtures::e2_c(), fixtures::e2_rho()), fixtures::e2_f());
    EXPECT_TRUE(cocommutator_from_rmatrix(fixtures::e2_c(), RMatrix(3)).is_zero());
}

TEST(RMatrix, CoboundaryMatchesDenseOracle) {
    const auto dense = oracle::coboundary(fixtures::e2_c(), fixtures::e2_rho());
    const auto f = cocommutator_from_rmatrix(fixtures::e2_c(), fixtures::e2_rho());
    for (Index a = 1; a <= 3; ++a)
        for (Index b = 1; b <= 3; ++b)
            for (Index k = 1; k <= 3; ++k) {
                auto it = dense.find({a, b, k});
                EXPECT_EQ(f.get(a, b, k), it == dense.end() ? Scalar{} : it->second);
            }
}

TEST(RMatrix, NonInvariantSymmetricPartIsRejected) {
    RMatrix jj(3);
    jj.set(1, 1, 1);
    EXPECT_THROW(cocommutator_from_rmatrix(fixtures::e2_c(), jj), NotSkewError);
}

TEST(AdInvariance, AdjointActionOnJJ) {
    RMatrix jj(3);
    jj.set(1, 1, 1);
    const std::map<std::array<Index, 3>, Scalar> expected{
        {{2, 1, 3}, Scalar(-1)}, {{2, 3, 1}, Scalar(-1)}, {{3, 1, 2}, Scalar(1)}, {{3, 2, 1}, Scalar(1)}};
    std::map<std::array<Index, 3>, Scalar> got;
    for (const auto& [k, v] : adjoint_action<2>(fixtures::e2_c(), jj))
        if (!v.is_zero()) got[k] = v;
    EXPECT_EQ(got, expected);
    EXPECT_EQ(check_ad_invariance(fixtures::e2_c(), jj).violations.size(), 4u);
}

TEST(AdInvariance, ZeroTensorIsInvariant) {
    EXPECT_TRUE(check_ad_invariance(fixtures::e2_c(), RMatrix(3)).ok());
    EXPECT_TRUE(check_ad_invariance(fixtures::e2_c(), Tensor3(3)).ok());
}

TEST(AdInvariance, SymmetricPartOfCanonicalRIsInvariant) {
    const DoubleAlgebra d = fixtures::e2_double();
    const RMatrix s = canonical_rmatrix(d).symmetric_part();
    EXPECT_TRUE(check_ad_invariance(d.bracket, s).ok());
    // the antisymmetric part alone is not invariant
    EXPECT_FALSE(check_ad_invariance(d.bracket, canonical_rmatrix(d).antisymmetric_part()).ok());
}

TEST(Schouten, ZeroRho) { EXPECT_TRUE(schouten_defect(fixtures::e2_c(), RMatrix(3)).is_zero()); }

TEST(Schouten, CanonicalROfDoubleSolvesCybe) {
    const DoubleAlgebra d = fixtures::e2_double();
    EXPECT_TRUE(schouten_defect(d.bracket, canonical_rmatrix(d)).is_zero());
    EXPECT_TRUE(oracle::schouten(d.bracket, canonical_rmatrix(d)).is_zero());
    EXPECT_TRUE(check_cybe(d.bracket, canonical_rmatrix(d)).ok());
}

// rho = z J12^P1 is quasitriangular: [[rho, rho]] = z^2 J12^P1^P2, which is ad-invariant.
TEST(Schouten, E2RhoIsQuasitriangular) {
    const Tensor3 t = schouten_defect(fixtures::e2_c(), fixtures::e2_rho());
    EXPECT_EQ(t, oracle::schouten(fixtures::e2_c(), fixtures::e2_rho()));
    ASSERT_EQ(t.entries().size(), 6u);
    const Scalar z2 = z() * z();
    const Scalar top = t.get({1, 2, 3});
    EXPECT_TRUE(top == z2 || top == -z2);
    EXPECT_EQ(t.get({2, 1, 3}), -top);
    EXPECT_EQ(t.get({2, 3, 1}), top);
    EXPECT_EQ(t.get({3, 2, 1}), -top);
    EXPECT_TRUE(check_ad_invariance(fixtures::e2_c(), t).ok());
    EXPECT_EQ(check_cybe(fixtures::e2_c(), fixtures::e2_rho()).violations.size(), 6u);
}

TEST(BialgebraProperty, SparseChecksAgreeWithDenseOracle) {
    testing::BialgebraGenerator gen(2024);
    for (int trial = 0; trial < 150; ++trial) {
        LieBialgebra b = gen.next();
        ASSERT_TRUE(is_valid(b)) << "generator produced an invalid bialgebra at trial " << trial;
        // inject one random component into c and one into f
        const int n = b.dim;
        if (n >= 2) {
            const Index i = gen.uniform(1, n - 1), j = gen.uniform(i + 1, n), k = gen.uniform(1, n);
            b.c.add(i, j, k, gen.uniform(1, 2));
            const Index p = gen.uniform(1, n - 1), q = gen.uniform(p + 1, n), r = gen.uniform(1, n);
            b.f.add(p, q, r, z());
        }
        EXPECT_EQ(as_map(check_jacobi(b.c)), oracle::jacobi(b.c));
        EXPECT_EQ(as_map(check_jacobi(transpose_roles(b.f), DefectKind::co_jacobi)), oracle::jacobi(transpose_roles(b.f)));
        EXPECT_EQ(as_map(check_cocycle(b.c, b.f)), oracle::cocycle(b.c, b.f));
    }
}

TEST(BialgebraProperty, GeneratedCoboundariesSatisfyGeneralizedCybe) {
    testing::BialgebraGenerator gen(5);
    for (const auto& known : testing::known_algebras()) {
        if (!known.unimodular_dim3) continue;
        const CommutatorTensor c = testing::tensor_of(known);
        for (int trial = 0; trial < 10; ++trial) {
            RMatrix r(3);
            for (Index i = 1; i <= 3; ++i)
                for (Index j = i + 1; j <= 3; ++j) {
                    const int v = gen.uniform(-3, 3);
                    r.set(i, j, v);
                    r.set(j, i, -v);
                }
            EXPECT_TRUE(check_ad_invariance(c, schouten_defect(c, r)).ok());
            EXPECT_TRUE(is_valid(LieBialgebra::anonymous(c, cocommutator_from_rmatrix(c, r))));
        }
    }
}

}  // namespace
}  // namespace lieb
