#include "yh/fields/linalg.hpp"
#include "yh/fields/poly.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace yh;

namespace {

ScalarPoly rat_poly(std::vector<int> c) {
    std::vector<Scalar> v;
    for (int x : c) v.emplace_back(x);
    return ScalarPoly(v);
}

ScalarPoly phi_poly(int N) {
    std::vector<Scalar> v;
    for (const auto& c : cyclotomic_polynomial_coeffs(N)) v.emplace_back(c);
    return ScalarPoly(v);
}

Scalar random_scalar(std::mt19937& rng, int N) {
    std::uniform_int_distribution<int> num(-9, 9), den(1, 5);
    CyclotomicScalar::Coeffs c;
    for (int i = 0; i < euler_phi(N); ++i) c.emplace_back(BigRational(num(rng), den(rng)));
    return CyclotomicScalar(N, c);
}

}  // namespace

TEST(BigRational, NormalizesAndParses) {
    BigRational a(6, -4);
    EXPECT_EQ(a.num_str(), "-3");
    EXPECT_EQ(a.den_str(), "2");
    EXPECT_EQ(BigRational::parse("-3/2"), a);
    EXPECT_EQ(BigRational::parse("7"), BigRational(7));
    EXPECT_THROW(BigRational::parse("1/0"), std::exception);
    EXPECT_THROW(BigRational(1, 0), std::exception);
}

TEST(BigRational, PromotesPastInt64) {
    BigRational big(INT64_MAX);
    BigRational sq = big * big;
    EXPECT_EQ(sq.num_str(), "85070591730234615847396907784232501249");
    EXPECT_EQ(sq / big, big);
    EXPECT_TRUE((sq - sq).is_zero());
    EXPECT_EQ((BigRational(1) / sq) * sq, BigRational(1));
}

TEST(Cyclotomic, SmallPolynomials) {
    EXPECT_EQ(phi_poly(1), rat_poly({-1, 1}));
    EXPECT_EQ(phi_poly(2), rat_poly({1, 1}));
    EXPECT_EQ(phi_poly(6), rat_poly({1, -1, 1}));
}

TEST(Cyclotomic, ProductOverDivisorsIsXnMinusOne) {
    for (int N = 1; N <= 24; ++N) {
        ScalarPoly prod(Scalar(1));
        for (int d = 1; d <= N; ++d)
            if (N % d == 0) prod = prod * phi_poly(d);
        std::vector<int> target(static_cast<std::size_t>(N) + 1, 0);
        target[0] = -1;
        target[static_cast<std::size_t>(N)] = 1;
        EXPECT_EQ(prod, rat_poly(target)) << "N=" << N;
        EXPECT_EQ(phi_poly(N).degree(), euler_phi(N));
    }
}

TEST(Cyclotomic, ZetaPowers) {
    EXPECT_EQ(CyclotomicScalar::zeta_power(2, 2), Scalar(-1));
    EXPECT_EQ(CyclotomicScalar::zeta_power(4, 3), Scalar(-1));
    for (int r = 1; r <= 7; ++r) {
        Scalar z1 = CyclotomicScalar::zeta_power(r, 1);
        EXPECT_TRUE((z1 * z1.inverse()).is_one());
        Scalar z = CyclotomicScalar::zeta_power(r, 2);
        EXPECT_TRUE(z.pow(r).is_one()) << r;
        for (int k = 1; k < r; ++k) EXPECT_FALSE(z.pow(k).is_one()) << r << " " << k;
    }
    EXPECT_THROW(Scalar(0).inverse(), ArithmeticError);
}

TEST(Cyclotomic, FieldAxiomsOnRandomTriples) {
    std::mt19937 rng(7);
    for (int N : {3, 4, 5, 8, 12}) {
        for (int trial = 0; trial < 25; ++trial) {
            Scalar a = random_scalar(rng, N), b = random_scalar(rng, N), c = random_scalar(rng, N);
            EXPECT_EQ((a * b) * c, a * (b * c));
            EXPECT_EQ(a * (b + c), a * b + a * c);
            EXPECT_EQ(a + b, b + a);
            EXPECT_EQ(a * b, b * a);
            if (!a.is_zero()) {
                EXPECT_TRUE((a * a.inverse()).is_one());
            }
            if (!b.is_zero()) {
                EXPECT_EQ((a / b) * b, a);
            }
        }
    }
}

TEST(Cyclotomic, OrdersDoNotMix) {
    Scalar z3 = CyclotomicScalar::zeta_power(3, 2), z4 = CyclotomicScalar::zeta_power(4, 2);
    EXPECT_THROW(z3 + z4, ArithmeticError);
    EXPECT_EQ(z3 * Scalar(2) - z3, z3);
}

TEST(Poly, GcdAndNormalize) {
    EXPECT_EQ(poly_gcd(rat_poly({-1, 0, 1}), rat_poly({-1, 1})), rat_poly({-1, 1}));
    ScalarRatFun f(rat_poly({-1, 1}) * rat_poly({2, 1}), rat_poly({-1, 1}));
    EXPECT_EQ(f.num(), rat_poly({2, 1}));
    EXPECT_EQ(f.den(), rat_poly({1}));
    ScalarRatFun g(f.num(), f.den());
    EXPECT_EQ(f, g);
}

TEST(Poly, EvalAfterCancellation) {
    Scalar v(3);
    ScalarPoly x = ScalarPoly::x();
    ScalarRatFun f(x * x - ScalarPoly(v * v), x - ScalarPoly(v));
    EXPECT_EQ(f.eval(v), Scalar(2) * v);
    ScalarRatFun pole(ScalarPoly(Scalar(1)), x - ScalarPoly(v));
    try {
        pole.eval(v);
        FAIL() << "expected a pole";
    } catch (const PoleError& e) {
        EXPECT_EQ(e.multiplicity, 1);
        EXPECT_EQ(e.factor, x - ScalarPoly(v));
    }
    // eval after normalize agrees with direct substitution away from poles
    ScalarPoly num = rat_poly({1, 2, 3}), den = rat_poly({5, 1});
    ScalarRatFun h(num, den);
    for (int t = 0; t < 6; ++t) EXPECT_EQ(h.eval(Scalar(t)), num.eval(Scalar(t)) / den.eval(Scalar(t)));
}

TEST(LinAlg, IdentityAndRank) {
    Matrix id(3, std::vector<Scalar>(3, Scalar(0)));
    for (int i = 0; i < 3; ++i) id[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = Scalar(1);
    EXPECT_EQ(rank(id), 3u);
    EXPECT_TRUE(determinant(id).is_one());
    Scalar z = CyclotomicScalar::zeta_power(3, 2);
    Matrix m{{Scalar(1), z}, {z, z * z}};
    EXPECT_EQ(rank(m), 1u);
    EXPECT_TRUE(determinant(m).is_zero());
}

TEST(LinAlg, SolveAndInconsistency) {
    Matrix m{{Scalar(1), Scalar(2)}, {Scalar(3), Scalar(4)}};
    auto x = solve(m, {Scalar(5), Scalar(6)});
    ASSERT_TRUE(x);
    EXPECT_EQ((*x)[0], Scalar(-4));
    EXPECT_EQ((*x)[1], BigRational(9, 2));
    Matrix s{{Scalar(1), Scalar(1)}, {Scalar(2), Scalar(2)}};
    EXPECT_FALSE(solve(s, {Scalar(1), Scalar(3)}));
}

TEST(LinAlg, EchelonCoordinates) {
    EchelonSpace sp(4, true);
    SparseVec a{{0, Scalar(1)}, {2, Scalar(3)}}, b{{1, Scalar(2)}, {2, Scalar(1)}}, c{{0, Scalar(2)}, {1, Scalar(4)}, {2, Scalar(8)}};
    EXPECT_TRUE(sp.insert(a));
    EXPECT_TRUE(sp.insert(b));
    EXPECT_FALSE(sp.insert(c));  // c = 2a + 2b
    EXPECT_EQ(sp.rank(), 2u);
    SparseVec v{{0, Scalar(1)}, {1, Scalar(-2)}, {2, Scalar(2)}};  // a - b
    auto co = sp.coordinates(v);
    ASSERT_TRUE(co);
    SparseVec expect{{0, Scalar(1)}, {1, Scalar(-1)}};
    EXPECT_EQ(*co, expect);
    EXPECT_FALSE(sp.coordinates(SparseVec{{3, Scalar(1)}}));
}
