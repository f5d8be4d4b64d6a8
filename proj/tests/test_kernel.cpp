#include "yh/kernel/relations.hpp"

#include <gtest/gtest.h>

#include <map>

using namespace yh;

namespace {

AlgebraPtr make(int r, int n, int d, int q = 2) {
    std::vector<Scalar> v = d == 1 ? std::vector<Scalar>{Scalar(1)} : std::vector<Scalar>{Scalar(1), Scalar(5)};
    return Algebra::create(r, n, d, Scalar(q), v);
}

// Word with only X exponents.
Element X_word(const Algebra& Y, std::vector<int> alpha) {
    return Y.word_element(Word{std::move(alpha), std::vector<int>(static_cast<std::size_t>(Y.n()), 0), Permutation(Y.n())});
}

// Independent Iwahori-Hecke multiplication on T_w, quadratic relation T^2 = 1 + c T.
using HeckeElt = std::map<std::vector<int>, Scalar>;
HeckeElt hecke_mul_s(const HeckeElt& x, int i, const Scalar& c, int n) {
    HeckeElt out;
    Permutation s = Permutation::simple(n, i);
    for (const auto& [im, a] : x) {
        Permutation w(im), ws = w * s;
        std::vector<int> wsim;
        for (int k = 1; k <= n; ++k) wsim.push_back(ws(k));
        out[wsim] += a;
        if (ws.length() < w.length()) out[im] += a * c;
    }
    for (auto it = out.begin(); it != out.end();) it = it->second.is_zero() ? out.erase(it) : std::next(it);
    return out;
}

HeckeElt to_hecke(const Element& x, const Algebra& Y) {
    HeckeElt out;
    for (const auto& [idx, c] : x.terms()) {
        Word w = Y.word(idx);
        std::vector<int> im;
        for (int k = 1; k <= Y.n(); ++k) im.push_back(w.w(k));
        out[im] = c;
    }
    return out;
}

}  // namespace

TEST(Kernel, CyclotomicRuleExamples) {
    auto Y = make(1, 1, 2);
    EXPECT_EQ(Y->X(1) * Y->X(1), Scalar(6) * Y->X(1) - Y->scalar(Scalar(5)));
    auto H = Algebra::create(1, 2, 1, Scalar(2), {Scalar(1)});
    EXPECT_EQ(H->X(2), H->one() + H->qc() * H->g(1));
    EXPECT_EQ(H->qc(), BigRational(3, 2));
    auto C = Algebra::create(1, 2, 1, Scalar(3), {Scalar(7)});
    EXPECT_EQ(C->X(1), C->scalar(Scalar(7)));
}

TEST(Kernel, ReductionOfXdAndInverse) {
    for (int d = 1; d <= 3; ++d) {
        std::vector<Scalar> v;
        for (int k = 0; k < d; ++k) v.emplace_back(k + 2);
        auto Y = Algebra::create(2, 2, d, Scalar(3), v);
        Element xd = Y->one();
        for (int k = 0; k < d; ++k) xd = xd * Y->X(1);
        Element expect = Y->zero();
        for (int m = 0; m < d; ++m) {
            std::vector<int> al{m, 0};
            expect -= Y->a()[static_cast<std::size_t>(d - m - 1)] * X_word(*Y, al);
        }
        EXPECT_EQ(xd, expect) << d;
        for (int k = 1; k <= 2; ++k) {
            EXPECT_EQ(Y->X_inv(k) * Y->X(k), Y->one());
            EXPECT_EQ(Y->X(k) * Y->X_inv(k), Y->one());
        }
        EXPECT_EQ(Y->X_monomial({-1, 0}), Y->X_inv(1));
    }
}

TEST(Kernel, GeneratorProducts) {
    auto Y = make(2, 3, 2);
    EXPECT_EQ(Y->t(1) * Y->t(1), Y->one());
    EXPECT_EQ(Y->g(1) * Y->g_inv(1), Y->one());
    EXPECT_EQ(Y->g(1) * Y->X(1) * Y->g(1), X_word(*Y, {0, 1, 0}));
    Element e1 = Y->e(1);
    EXPECT_EQ(e1 * e1, e1);
    EXPECT_EQ(e1, BigRational(1, 2) * (Y->one() + Y->t(1) * Y->t(2)));
    EXPECT_EQ(Y->g(1) * Y->X(1) * Y->g(1) * Y->X(1), Y->X(1) * Y->g(1) * Y->X(1) * Y->g(1));
    Element x = Y->X(2) * Y->t(3) * Y->g(2) + Y->scalar(Scalar(4));
    EXPECT_EQ(x * Y->one(), x);
    EXPECT_EQ(Y->one() * x, x);
    auto Y1 = make(1, 3, 2);
    EXPECT_EQ(Y1->e(1), Y1->one());
    EXPECT_EQ(Y1->e(1, 3), Y1->one());
}

TEST(Kernel, SetPartitionIdempotents) {
    auto Y = make(3, 3, 1);
    SetPartition all{{{1, 2, 3}}};
    Element E = Y->E(all);
    EXPECT_EQ(E * E, E);
    EXPECT_EQ(E, Y->e(1, 2) * Y->e(1, 3) * Y->e(2, 3));
    EXPECT_EQ(Y->E(SetPartition{{{1}, {2}, {3}}}), Y->one());
}

TEST(Kernel, StarExamples) {
    auto Y = make(2, 3, 2);
    Permutation s1 = Permutation::simple(3, 1), s2 = Permutation::simple(3, 2);
    EXPECT_EQ(Y->star(Y->g_perm(s1 * s2)), Y->g_perm(s2 * s1));
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j) EXPECT_EQ(Y->star(Y->e(i, j)), Y->e(i, j));
    EXPECT_EQ(Y->star(Y->X(3)), Y->X(3));
    Element x = Y->X(1) * Y->g(1) * Y->t(2);
    EXPECT_EQ(Y->star(x), Y->t(2) * Y->g(1) * Y->X(1));
}

TEST(Kernel, HeckeQuotientAgreesWithClassicalHecke) {
    // r = d = 1: the algebra is the Iwahori-Hecke algebra, with X_1 acting as v_1.
    auto Y = Algebra::create(1, 4, 1, BigRational(3, 2), {Scalar(2)});
    EXPECT_EQ(Y->dim(), 24u);
    Scalar c = Y->qc();
    for (std::uint32_t i = 0; i < Y->dim(); ++i)
        for (int s = 1; s < 4; ++s) {
            Element x = Y->basis(i);
            EXPECT_EQ(to_hecke(x * Y->g(s), *Y), hecke_mul_s(to_hecke(x, *Y), s, c, 4));
        }
    // X_{k+1} = g_k X_k g_k computed with the oracle
    HeckeElt xk{{{1, 2, 3, 4}, Scalar(2)}};
    for (int k = 1; k < 4; ++k) {
        HeckeElt left;
        // g_k * xk via star symmetry of the Hecke algebra: T_s T_w = (T_{w^-1} T_s)^*
        HeckeElt inv;
        for (const auto& [im, a] : xk) {
            Permutation w(im);
            std::vector<int> iim;
            for (int j = 1; j <= 4; ++j) iim.push_back(w.inverse()(j));
            inv[iim] = a;
        }
        HeckeElt t = hecke_mul_s(inv, k, c, 4);
        for (const auto& [im, a] : t) {
            Permutation w(im);
            std::vector<int> iim;
            for (int j = 1; j <= 4; ++j) iim.push_back(w.inverse()(j));
            left[iim] = a;
        }
        xk = hecke_mul_s(left, k, c, 4);
        EXPECT_EQ(to_hecke(Y->X(k + 1), *Y), xk) << k;
    }
}

TEST(Kernel, IwahoriHeckeDimension) {
    auto Y = Algebra::create(1, 3, 1, Scalar(2), {Scalar(1)});
    EXPECT_EQ(Y->dim(), 6u);
    Element x = Y->X(3) * Y->g(1) * Y->X(2);
    for (const auto& [idx, c] : x.terms()) {
        Word w = Y->word(idx);
        EXPECT_EQ(w.alpha, (std::vector<int>{0, 0, 0}));
        EXPECT_EQ(w.beta, (std::vector<int>{0, 0, 0}));
    }
}

TEST(Kernel, WordIndexIsCanonicalOrder) {
    auto Y = make(2, 3, 2);
    EXPECT_EQ(Y->dim(), 384u);
    for (std::uint32_t i = 0; i + 1 < Y->dim(); ++i) {
        Word a = Y->word(i), b = Y->word(i + 1);
        auto key = [](const Word& w) {
            std::vector<int> im;
            for (int k = 1; k <= w.w.size(); ++k) im.push_back(w.w(k));
            return std::make_tuple(w.alpha, w.beta, im);
        };
        EXPECT_LT(key(a), key(b));
        EXPECT_EQ(Y->index(a), i);
    }
    Word bad{{2, 0, 0}, {0, 0, 0}, Permutation(3)};
    EXPECT_THROW(Y->index(bad), std::invalid_argument);
}

TEST(Kernel, AffineLayer) {
    auto Y = make(2, 2, 2);
    // f_1 in the affine layer is X^2 - 6X + 5
    AffineElement f1 = Y->affine_f(1);
    EXPECT_EQ(f1.size(), 3u);
    // f_2 has leading term X_2^2
    AffineElement f2 = Y->affine_f(2);
    bool lead = false;
    for (const auto& [w, c] : f2)
        if (w.alpha == std::vector<int>{0, 2} && w.B == 0 && w.P == 0) lead = c.is_one();
    EXPECT_TRUE(lead);
    EXPECT_TRUE(Y->from_affine(f2).is_zero());
    // X_1 X_1^{-1} = 1 in the affine layer
    AffineElement x = Y->affine_rmul_X(Y->affine_rmul_X(Y->affine_identity(), 1, 1), 1, -1);
    EXPECT_EQ(x, Y->affine_identity());
    // (g_1 X_1) g_1 = X_2 word
    AffineElement y = Y->affine_rmul_g(Y->affine_rmul_X(Y->affine_rmul_g(Y->affine_identity(), 1), 1), 1);
    AffineElement expect{{AffineWord{{0, 1}, 0, 0}, Scalar(1)}};
    EXPECT_EQ(y, expect);
    EXPECT_THROW(Y->g(2), std::out_of_range);
    EXPECT_THROW(Y->X(3), std::out_of_range);
}

TEST(Kernel, ContextMismatchIsRejected) {
    auto A = make(2, 2, 2), B = make(2, 2, 2);
    EXPECT_THROW(A->g(1) + B->g(1), std::invalid_argument);
    EXPECT_THROW(A->g(1) * B->g(1), std::invalid_argument);
}

class RelationSuite : public ::testing::TestWithParam<std::tuple<int, int, int, int>> {};

TEST_P(RelationSuite, AllRelationsHold) {
    auto [r, d, n, q] = GetParam();
    auto Y = make(r, n, d, q);
    for (const auto& c : relation_checks(*Y)) EXPECT_TRUE(c.passed) << c.name << ": " << c.witness;
    for (const auto& c : basis_checks(*Y, 11, 100)) EXPECT_TRUE(c.passed) << c.name << ": " << c.witness;
}

INSTANTIATE_TEST_SUITE_P(Small, RelationSuite,
                         ::testing::Combine(::testing::Values(1, 2), ::testing::Values(1, 2), ::testing::Values(2, 3), ::testing::Values(2, 3)));

TEST(Kernel, RelationsWithCyclotomicParameters) {
    // r = 3 puts the coefficients in Q(zeta_3).
    Scalar z = CyclotomicScalar::zeta_power(3, 2);
    auto Y = Algebra::create(3, 3, 2, Scalar(2), {z, Scalar(3)});
    for (const auto& c : relation_checks(*Y)) EXPECT_TRUE(c.passed) << c.name << ": " << c.witness;
    for (const auto& c : basis_checks(*Y, 5, 30)) EXPECT_TRUE(c.passed) << c.name << ": " << c.witness;
}
