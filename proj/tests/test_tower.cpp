#include "yh/kernel/tower.hpp"

#include <gtest/gtest.h>

using namespace yh;

namespace {

std::vector<Scalar> params(int d) { return d == 1 ? std::vector<Scalar>{Scalar(1)} : std::vector<Scalar>{Scalar(1), Scalar(5)}; }

Tower tower(int r, int d, int n) {
    return Tower(Algebra::create(r, n, d, Scalar(2), params(d)), Algebra::create(r, n + 1, d, Scalar(2), params(d)));
}

}  // namespace

TEST(Tower, RankExamples) {
    EXPECT_EQ(tower(1, 1, 1).rank(), 2u);
    EXPECT_EQ(tower(2, 2, 1).rank(), 32u);
    EXPECT_EQ(tower(2, 2, 0).rank(), 4u);
    EXPECT_EQ(tower(2, 2, 1).family_size(), 32u);
}

TEST(Tower, AllChecksSmall) {
    for (int r = 1; r <= 2; ++r)
        for (int d = 1; d <= 2; ++d)
            for (int n = 0; n <= 2; ++n) {
                Tower T = tower(r, d, n);
                EXPECT_EQ(T.rank(), tower_expected_rank(r, d, n + 1));
                for (const auto& c : tower_checks(T, 3, 20)) EXPECT_TRUE(c.passed) << r << d << n << " " << c.name << ": " << c.witness;
            }
}

TEST(Tower, EmbeddingIsMultiplicative) {
    auto S = Algebra::create(2, 2, 2, Scalar(2), params(2));
    auto B = Algebra::create(2, 3, 2, Scalar(2), params(2));
    for (std::uint32_t i = 0; i < S->dim(); i += 3)
        for (std::uint32_t j = 0; j < S->dim(); j += 5) {
            Element lhs = embed(*S, *B, S->basis(i) * S->basis(j));
            Element rhs = embed(*S, *B, S->basis(i)) * embed(*S, *B, S->basis(j));
            EXPECT_EQ(lhs, rhs);
        }
}

TEST(Tower, ThetaExamples) {
    Tower T = tower(2, 2, 1);
    const Algebra& B = T.big();
    EXPECT_EQ(T.theta(B.one()), T.small().one());
    EXPECT_TRUE(T.theta(B.X(2)).is_zero());
    EXPECT_TRUE(T.theta(B.t(2)).is_zero());
    EXPECT_TRUE(T.theta(B.X(2) * B.t(2)).is_zero());
    EXPECT_TRUE(T.theta(B.g(1)).is_zero());
    // X_2^2 has theta-component -a_d
    Element x2 = B.X(2) * B.X(2);
    EXPECT_EQ(T.theta(x2), -B.a().back() * T.small().one());
}

TEST(Frobenius, GramNonsingular) {
    for (int r = 1; r <= 2; ++r)
        for (int d = 1; d <= 2; ++d) {
            Matrix G = frobenius_gram(r, 2, d, Scalar(2), params(d));
            EXPECT_EQ(G.size(), tower_expected_rank(r, d, 2));
            EXPECT_FALSE(determinant(G).is_zero()) << r << d;
            // the trace form is symmetric
            for (std::size_t i = 0; i < G.size(); ++i)
                for (std::size_t j = 0; j < G.size(); ++j) EXPECT_EQ(G[i][j], G[j][i]);
        }
}
