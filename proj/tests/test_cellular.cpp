#include "yh/cellular/murphy.hpp"

#include <gtest/gtest.h>

using namespace yh;

namespace {

AlgebraPtr make(int r, int n, int d, int q = 2) {
    std::vector<Scalar> v = d == 1 ? std::vector<Scalar>{Scalar(1)} : std::vector<Scalar>{Scalar(1), Scalar(5)};
    return Algebra::create(r, n, d, Scalar(q), v);
}

RDPartition shape1(std::vector<int> parts) { return RDPartition(1, 1, {Partition(std::move(parts))}); }

}  // namespace

TEST(Murphy, SmallFramedExample) {
    auto Y = make(2, 2, 1);
    RDPartition lam = RDPartition::from_nested({{Partition({2})}, {Partition()}});
    MurphyDatum D = murphy_datum(*Y, lam);
    // zeta_2 = -1, so u_lambda = t_2 + 1
    EXPECT_EQ(D.u, Y->t(2) + Y->one());
    EXPECT_EQ(D.E, Y->e(1, 2));
    EXPECT_EQ(D.ua, Y->one());
    EXPECT_EQ(D.x, Y->one() + Scalar(2) * Y->g(1));
    EXPECT_EQ(D.m, (Y->t(2) + Y->one()) * Y->e(1, 2) * (Y->one() + Scalar(2) * Y->g(1)));
}

TEST(Murphy, HeckeRowShapeIsTheSymmetriser) {
    auto Y = make(1, 3, 1);
    MurphyDatum D = murphy_datum(*Y, shape1({3}));
    Element expect = Y->zero();
    for (std::uint32_t P = 0; P < Y->perm_count(); ++P) expect += Y->q().pow(Y->perm(P).length()) * Y->g_perm(Y->perm(P));
    EXPECT_EQ(D.m, expect);
    EXPECT_EQ(Y->star(D.m), D.m);
}

TEST(Murphy, InitialPairGivesMLambda) {
    auto Y = make(2, 3, 2);
    for (const auto& lam : enumerate_rd_partitions(2, 2, 3)) {
        MurphyDatum D = murphy_datum(*Y, lam);
        RDTableau t0 = initial_tableau(lam);
        EXPECT_EQ(murphy_m_st(*Y, D, t0, t0), D.m) << lam.str();
        for (const auto& [name, f] : murphy_forms(D)) EXPECT_EQ(f, D.m) << lam.str() << " " << name;
    }
}

TEST(Murphy, ReducedWordProductIsGw) {
    auto Y = make(2, 3, 1);
    for (std::uint32_t P = 0; P < Y->perm_count(); ++P) EXPECT_EQ(rmul_perm(*Y, Y->one(), Y->perm(P)), Y->g_perm(Y->perm(P)));
}

TEST(Murphy, StarSwapsRowStandardPairs) {
    auto Y = make(2, 2, 2);
    for (const auto& lam : enumerate_rd_partitions(2, 2, 2)) {
        MurphyDatum D = murphy_datum(*Y, lam);
        auto rs = row_standard_tableaux(lam);
        for (const auto& s : rs)
            for (const auto& t : rs) EXPECT_EQ(Y->star(murphy_m_st(*Y, D, s, t)), murphy_m_st(*Y, D, t, s));
    }
}

TEST(Murphy, ShapeMismatchRejected) {
    auto Y = make(1, 2, 1);
    MurphyDatum D = murphy_datum(*Y, shape1({2}));
    RDTableau t = initial_tableau(shape1({1, 1}));
    EXPECT_THROW(murphy_m_st(*Y, D, t, t), std::invalid_argument);
}

TEST(Cellular, ClassicalMurphyBasisAtN2) {
    auto Y = make(1, 2, 1);
    CellularBasis C(Y);
    ASSERT_EQ(C.size(), 2u);
    // 2x2 change of basis from the word basis
    Matrix M(2, std::vector<Scalar>(2, Scalar(0)));
    for (std::size_t p = 0; p < 2; ++p)
        for (const auto& [i, c] : C.elements()[p].value.terms()) M[p][i] = c;
    EXPECT_FALSE(determinant(M).is_zero());
    // m_(1,1) g_1 = -q^{-1} m_(1,1) + multiple of m_(2)
    std::size_t col = *C.shape_index(shape1({1, 1})), row = *C.shape_index(shape1({2}));
    const Element& m11 = C.at(col, 0, 0).value;
    Element rest = m11 * Y->g(1) + Y->q().inverse() * m11;
    const Element& m2 = C.at(row, 0, 0).value;
    EXPECT_FALSE(rest.is_zero());
    EXPECT_EQ(rest, rest.coeff(0) / m2.coeff(0) * m2);
}

TEST(Cellular, SizesAndInvertibility) {
    EXPECT_EQ(CellularBasis(make(2, 2, 2)).rank(), 32u);
    EXPECT_EQ(CellularBasis(make(1, 3, 2)).rank(), 48u);
}

TEST(Cellular, ResidualsActuallyOccur) {
    // X_1 pushes some m_st into strictly dominating shapes, so (C3) is not vacuous.
    CellularBasis C(make(2, 2, 2));
    const Algebra& Y = C.algebra();
    bool residual = false;
    for (const auto& e : C.elements())
        for (const auto& [p, c] : C.coordinates(e.value * Y.X(1))) residual |= C.elements()[p].shape != e.shape;
    EXPECT_TRUE(residual);
}

TEST(Cellular, FramingActsDiagonally) {
    CellularBasis C(make(2, 3, 2));
    const Algebra& Y = C.algebra();
    for (const auto& e : C.elements()) {
        const RDTableau& t = C.tableaux(e.shape)[e.t];
        for (int j = 1; j <= 3; ++j) EXPECT_EQ(e.value * Y.t(j), framing_eigenvalue(Y, t, j) * e.value);
    }
}

TEST(Cellular, IdentityInTheFramingSubalgebra) {
    CellularBasis C(make(2, 2, 2));
    auto res = verify_cellularity(C);
    ASSERT_EQ(res.size(), 7u);
    EXPECT_TRUE(res[6].passed) << res[6].witness;
}

class CellularSuite : public ::testing::TestWithParam<std::tuple<int, int, int>> {};

TEST_P(CellularSuite, AxiomsAndJM) {
    auto [r, d, n] = GetParam();
    CellularBasis C(make(r, n, d));
    for (const auto& c : verify_cellularity(C)) EXPECT_TRUE(c.passed) << c.name << ": " << c.witness;
    for (const auto& c : verify_jm(C)) EXPECT_TRUE(c.passed) << c.name << ": " << c.witness;
}

INSTANTIATE_TEST_SUITE_P(Small, CellularSuite,
                         ::testing::Combine(::testing::Values(1, 2), ::testing::Values(1, 2), ::testing::Values(1, 2, 3)));

TEST(JM, RowShapeEigenvalue) {
    auto Y = Algebra::create(1, 2, 1, Scalar(3), {Scalar(7)});
    MurphyDatum D = murphy_datum(*Y, shape1({2}));
    EXPECT_EQ(D.m * Y->X(2), Scalar(7) * Scalar(9) * D.m);
    EXPECT_EQ(D.m * Y->X(1), Scalar(7) * D.m);
}

TEST(JM, ContentsOfInitialTableau) {
    auto Y = make(2, 3, 2);
    RDPartition lam = RDPartition::from_nested({{Partition(), Partition({2})}, {Partition({1}), Partition()}});
    RDTableau t = initial_tableau(lam);
    EXPECT_EQ(content(*Y, t, 1), Scalar(5));
    EXPECT_EQ(content(*Y, t, 2), Scalar(20));
    EXPECT_EQ(content(*Y, t, 3), Scalar(1));
    EXPECT_EQ(framing_eigenvalue(*Y, t, 3), Scalar(-1));
}

TEST(JM, CyclotomicParameters) {
    Scalar z = CyclotomicScalar::zeta_power(3, 2);
    CellularBasis C(Algebra::create(3, 2, 1, Scalar(2), {z}));
    for (const auto& c : verify_cellularity(C)) EXPECT_TRUE(c.passed) << c.name << ": " << c.witness;
    for (const auto& c : verify_jm(C)) EXPECT_TRUE(c.passed) << c.name << ": " << c.witness;
}
