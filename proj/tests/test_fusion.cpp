#include "yh/fusion/fusion.hpp"

#include <gtest/gtest.h>

using namespace yh;

namespace {

AlgebraPtr make(int r, int n, int d, int q = 2) {
    std::vector<Scalar> v = d == 1 ? std::vector<Scalar>{Scalar(1)} : std::vector<Scalar>{Scalar(1), Scalar(5)};
    return Algebra::create(r, n, d, Scalar(q), v);
}

const ScalarPoly U = ScalarPoly::x();

}  // namespace

TEST(Cancellation, SingleFactorCancels) {
    auto Y = make(2, 2, 2);
    Element A = Y->g(1) + Y->X(2);
    AlgRatFun f(ScalarPoly::linear_root(Scalar(3)) * AlgPoly::constant(A), ScalarPoly::linear_root(Scalar(3)));
    EvalRecord rec;
    EXPECT_EQ(evaluate_with_cancellation(f, Scalar(3), &rec), A);
    EXPECT_EQ(rec.multiplicity, 1);
    EXPECT_EQ(rec.den_after.degree(), 0);
}

TEST(Cancellation, OrderMismatchIsAPole) {
    auto Y = make(2, 2, 2);
    ScalarPoly lin = ScalarPoly::linear_root(Scalar(3));
    AlgRatFun f(lin * AlgPoly::constant(Y->g(1)), lin * lin);
    try {
        evaluate_with_cancellation(f, Scalar(3));
        FAIL() << "expected a pole";
    } catch (const PoleError& e) {
        EXPECT_EQ(e.multiplicity, 1);
    }
    // away from the pole it just substitutes
    EXPECT_EQ(evaluate_with_cancellation(f, Scalar(4)), Y->g(1));
}

TEST(Baxterized, CorrectionVanishesAtZero) {
    auto Y = make(2, 3, 2);
    EXPECT_EQ(baxterized_g(*Y, 1, Scalar(7), Scalar(0)), Y->g(1));
    EXPECT_EQ(baxterized_g(*Y, 2, U, ScalarPoly()), AlgRatFun(AlgPoly::constant(Y->g(2))));
    EXPECT_THROW(baxterized_g(*Y, 1, Scalar(2), Scalar(2)), PoleError);
    EXPECT_THROW(baxterized_g(*Y, 1, U, U), PoleError);
}

TEST(Baxterized, SymbolicMatchesNumeric) {
    auto Y = make(2, 3, 2);
    AlgRatFun f = baxterized_g(*Y, 2, U, ScalarPoly(Scalar(5)));
    for (int a : {-3, 1, 2, 9, 13}) EXPECT_EQ(evaluate_with_cancellation(f, Scalar(a)), baxterized_g(*Y, 2, Scalar(a), Scalar(5)));
}

class BaxterSuite : public ::testing::TestWithParam<std::tuple<int, int>> {};

TEST_P(BaxterSuite, YangBaxterAndUnitarity) {
    auto [r, d] = GetParam();
    auto Y = make(r, 3, d);
    for (const auto& c : baxter_checks(*Y)) EXPECT_TRUE(c.passed) << c.name << ": " << c.witness;
}

INSTANTIATE_TEST_SUITE_P(Small, BaxterSuite, ::testing::Combine(::testing::Values(1, 2, 3), ::testing::Values(1, 2)));

TEST(Phi, FirstFactor) {
    auto Y1 = Algebra::create(2, 2, 1, Scalar(2), {Scalar(4)});
    EXPECT_EQ(phi1(*Y1), AlgPoly::constant(Y1->one()));
    auto Y2 = make(2, 2, 2);
    // u + X_1 - v_1 - v_2
    AlgPoly expect(*Y2, {Y2->X(1) - Scalar(6) * Y2->one(), Y2->one()});
    EXPECT_EQ(phi1(*Y2), expect);
    auto Y3 = Algebra::create(1, 2, 3, Scalar(3), {Scalar(1), Scalar(2), Scalar(-4)});
    EXPECT_EQ(phi1(*Y3).degree(), 2);
}

TEST(Phi, SecondFactorIsConjugatedFirst) {
    auto Y = make(2, 3, 2);
    Scalar c1(5);
    AlgRatFun phi2 = phi_chain(*Y, {c1});
    EXPECT_EQ(phi2.den(), ScalarPoly::linear_root(c1));
    AlgRatFun expect = baxterized_g(*Y, 1, U, ScalarPoly(c1)) * AlgRatFun(phi1(*Y)) * AlgRatFun(AlgPoly::constant(Y->g_inv(1)));
    EXPECT_EQ(phi2, expect);
    AlgRatFun phi3 = phi_chain(*Y, {c1, Scalar(20)});
    EXPECT_EQ(phi3, baxterized_g(*Y, 2, U, ScalarPoly(Scalar(20))) * phi2 * AlgRatFun(AlgPoly::constant(Y->g_inv(2))));
    EXPECT_THROW(phi_chain(*Y, {c1, c1, c1}), std::invalid_argument);
}

TEST(Gamma, FactorShapes) {
    auto Y1 = make(1, 2, 1);
    EXPECT_EQ(gamma_factor(*Y1, 2), AlgPoly::constant(Y1->one()));
    auto Y = make(2, 2, 2);
    for (int p = 1; p <= 2; ++p) {
        const Scalar& z = Y->zeta(p);
        Element ev = gamma_factor(*Y, 1).eval(z);
        EXPECT_EQ(ev, z * Y->one() + Y->t(1));
        EXPECT_EQ(ev, (Scalar(2) * z.inverse()) * (BigRational(1, 2) * (Y->one() + z.inverse() * Y->t(1))));
    }
}

TEST(Gamma, EvaluatedFactorSplitsByFraming) {
    // F_t^T(zeta) (sum_s zeta^{r-1-s} t_2^s) E_u = sum of E_s over extensions with the same r-position
    auto Y = make(2, 2, 2);
    auto T = content_tables(*Y);
    auto tabs = all_standard_tableaux(2, 2, 2);
    for (const auto& t : tabs) {
        Element Eu = idempotent_prefix(*Y, t, 1);
        for (int p = 1; p <= 2; ++p) {
            Element sum = Y->zero();
            for (const auto& s : tabs)
                if (s.remove_last().str() == t.remove_last().str() && s.r_position(2) == p) sum += idempotent_interpolation(*Y, T, s);
            // r = 2: F_t^T(zeta_p) = 1 / (zeta_p - zeta_other)
            Scalar ft = Scalar(1) / (Y->zeta(p) - Y->zeta(3 - p));
            EXPECT_EQ(ft * lmul_gamma_at(*Y, 2, Y->zeta(p), Eu), sum) << t.str() << " p=" << p;
        }
    }
}

TEST(Constants, ExampleShape) {
    auto Y = Algebra::create(2, 4, 2, BigRational(3, 2), {Scalar(2), Scalar(7)});
    RDPartition lam = worked_example_tableau().shape();
    const Scalar &q = Y->q(), &v1 = Y->v()[0], &v2 = Y->v()[1];
    Scalar z1 = Y->zeta(1), z2 = Y->zeta(2), qi = q.inverse();
    EXPECT_EQ(F_T_lambda(*Y, lam), Scalar(16) / (z1 * z1 * z2 * z2));
    Scalar w = v1 * q - v2 * qi;
    EXPECT_EQ(F_lambda(*Y, lam), (q + qi) * (v1 - v2) * w * w * (v2 * q - v1 * qi));
}

TEST(Constants, SizeOne) {
    auto Y = make(2, 1, 2);
    for (const auto& t : all_standard_tableaux(2, 2, 1)) {
        FusionConstants F = fusion_constants(*Y, t);
        ScalarPoly expect_den = ScalarPoly::linear_root(Scalar(1)) * ScalarPoly::linear_root(Scalar(5));
        EXPECT_EQ(F.F_t, ScalarRatFun(ScalarPoly::linear_root(content(*Y, t, 1)), expect_den));
    }
    auto Y1 = make(1, 1, 1);
    EXPECT_EQ(fusion_constants(*Y1, all_standard_tableaux(1, 1, 1)[0]).F_t, ScalarRatFun(Scalar(1)));
}

TEST(Constants, QInteger) {
    Scalar q(2);
    EXPECT_EQ(q_integer(q, 0), Scalar(0));
    EXPECT_EQ(q_integer(q, 1), Scalar(1));
    EXPECT_EQ(q_integer(q, 3), Scalar(4) + Scalar(1) + Scalar(BigRational(1, 4)));
}

TEST(Constants, RegularityUpToFour) {
    for (int r = 1; r <= 2; ++r)
        for (int d = 1; d <= 2; ++d) {
            auto Y = make(r, 1, d);
            for (int n = 1; n <= 4; ++n)
                for (const auto& t : all_standard_tableaux(r, d, n))
                    for (const auto& c : regularity_checks(*Y, t)) ASSERT_TRUE(c.passed) << c.name << ": " << c.witness;
        }
}

TEST(Fusion, TrivialCase) {
    auto Y = make(1, 1, 1);
    EXPECT_EQ(fusion_idempotent(*Y, all_standard_tableaux(1, 1, 1)[0]).E, Y->one());
}

TEST(Fusion, RepeatedContentCancels) {
    // r = d = 2, n = 2: both entries can carry content v_1 in different r-blocks
    auto Y = make(2, 2, 2);
    auto T = content_tables(*Y);
    bool seen = false;
    for (const auto& t : all_standard_tableaux(2, 2, 2)) {
        FusionResult R = fusion_idempotent(*Y, t);
        EXPECT_EQ(R.E, idempotent_interpolation(*Y, T, t));
        if (content(*Y, t, 1) == content(*Y, t, 2)) {
            EXPECT_NE(t.r_position(1), t.r_position(2));
            EXPECT_GE(R.steps[1].eval.multiplicity, 1);
            seen = true;
        }
    }
    EXPECT_TRUE(seen);
}

TEST(Fusion, GateRefuses) {
    auto Y = Algebra::create(2, 2, 2, Scalar(2), {Scalar(1), Scalar(4)});
    EXPECT_THROW(fusion_idempotent(*Y, all_standard_tableaux(2, 2, 2)[0]), GateError);
}

TEST(Fusion, TraceRecordsEveryStep) {
    auto Y = make(2, 3, 2);
    FusionResult R = fusion_idempotent(*Y, all_standard_tableaux(2, 2, 3)[5]);
    auto j = R.trace();
    ASSERT_EQ(j.size(), 3u);
    for (const auto& s : j)
        for (const char* key : {"step", "point", "denominator_before", "denominator_after", "cancelled_order", "digest"}) EXPECT_TRUE(s.contains(key));
    EXPECT_EQ(j[2]["digest"], element_digest(R.E));
}

class FusionSuite : public ::testing::TestWithParam<std::tuple<int, int, int>> {};

TEST_P(FusionSuite, AgreesWithInterpolation) {
    auto [r, d, n] = GetParam();
    auto Y = make(r, n, d);
    for (const auto& c : verify_fusion(*Y, n)) EXPECT_TRUE(c.passed) << c.name << ": " << c.witness;
}

INSTANTIATE_TEST_SUITE_P(Small, FusionSuite,
                         ::testing::Combine(::testing::Values(1, 2), ::testing::Values(1, 2), ::testing::Values(1, 2, 3)));

TEST(Example, WorkedTableau) {
    for (auto [q, v1, v2] : {std::tuple{Scalar(2), Scalar(1), Scalar(5)}, std::tuple{Scalar(BigRational(3, 2)), Scalar(2), Scalar(-7)}}) {
        auto Y = Algebra::create(2, 4, 2, q, {v1, v2});
        ExampleReport rep = worked_example(*Y);
        for (const auto& c : rep.checks) EXPECT_TRUE(c.passed) << c.name << ": " << c.witness;
    }
    auto Y = make(2, 4, 2);
    EXPECT_EQ(worked_example(*Y).fusion.prefactor, Scalar(BigRational(-1, 380)));
    // the g_1(v_1, v_1) factor is resolved by a first-order cancellation at step 2
    EXPECT_EQ(worked_example(*Y).fusion.steps[1].eval.multiplicity, 1);
}
