#include <random>

#include <gtest/gtest.h>

#include "klrtor/exact/interpolate.hpp"
#include "klrtor/exact/laurent.hpp"
#include "klrtor/exact/matrix.hpp"

using namespace klrtor;

namespace {

LaurentPoly random_laurent(std::mt19937& rng, int span = 4, int coeff = 5) {
    std::uniform_int_distribution<int> e(-span, span), c(-coeff, coeff), terms(0, 4);
    LaurentPoly p;
    for (int k = terms(rng); k > 0; --k) p.add_term(e(rng), c(rng));
    return p;
}

template <class Field>
ExactMatrix<Field> random_int_matrix(Field f, std::mt19937& rng, std::size_t r, std::size_t c, int bound) {
    std::uniform_int_distribution<long> d(-bound, bound);
    std::vector<std::vector<long>> rows(r, std::vector<long>(c));
    for (auto& row : rows)
        for (auto& x : row) x = d(rng);
    return ExactMatrix<Field>::from_rows(f, rows);
}

} // namespace

TEST(Laurent, BarInvolutionExamples) {
    LaurentPoly p{{1, 1}, {-3, 2}};
    EXPECT_EQ(bar_involution(p), (LaurentPoly{{-1, 1}, {3, 2}}));
    EXPECT_TRUE(bar_involution(LaurentPoly()).is_zero());
    std::mt19937 rng(11);
    for (int i = 0; i < 200; ++i) {
        auto q = random_laurent(rng);
        EXPECT_EQ(bar_involution(bar_involution(q)), q);
    }
}

TEST(Laurent, CanonicalForm) {
    LaurentPoly p{{2, 3}};
    p.add_term(2, -3);
    EXPECT_TRUE(p.is_zero());
    EXPECT_TRUE(p.terms().empty());
    EXPECT_EQ(LaurentPoly({{0, 1}, {1, 1}}).to_string("q"), "1+q");
    EXPECT_EQ(LaurentPoly({{-1, 1}, {3, 2}}).to_string(), "v^-1+2v^3");
    EXPECT_EQ(LaurentPoly().to_string(), "0");
}

TEST(Laurent, RingAxiomsOnRandomTriples) {
    std::mt19937 rng(7);
    for (int i = 0; i < 300; ++i) {
        auto a = random_laurent(rng), b = random_laurent(rng), c = random_laurent(rng);
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_EQ(a + b, b + a);
        EXPECT_EQ(a * b, b * a);
        EXPECT_TRUE((a - a).is_zero());
        EXPECT_EQ(bar_involution(a * b), bar_involution(a) * bar_involution(b));
    }
}

TEST(GradedRank, PolynomialRoundTrip) {
    GradedRank r({2, 0, 2, 4});
    EXPECT_EQ(r.degrees(), (std::vector<int>{0, 2, 2, 4}));
    EXPECT_EQ(r.to_poly(2), (LaurentPoly{{0, 1}, {1, 2}, {2, 1}}));
    EXPECT_EQ(GradedRank::from_poly(r.to_poly(2), 2), r);
    EXPECT_TRUE(r.dominates(GradedRank({0, 2})));
    EXPECT_FALSE(GradedRank({0, 2}).dominates(r));
    EXPECT_THROW(GradedRank::from_poly(LaurentPoly{{0, -1}}), std::invalid_argument);
}

TEST(PrimeField, Arithmetic) {
    PrimeField f(7);
    EXPECT_EQ(f.from_int(-1), 6u);
    for (std::uint32_t a = 1; a < 7; ++a) EXPECT_EQ(f.mul(a, f.inv(a)), 1u);
    EXPECT_EQ(f.from_rational(Rational(1, 2)), 4u);
    EXPECT_THROW(f.inv(0), std::domain_error);
    EXPECT_THROW(PrimeField(6), std::invalid_argument);
}

TEST(Matrix, RankAndKernelExamples) {
    auto id = ExactMatrix<RationalField>::identity(RationalField{}, 3);
    auto rk = rank_and_kernel(id);
    EXPECT_EQ(rk.rank, 3u);
    EXPECT_TRUE(rk.kernel.empty());

    auto ones = ExactMatrix<PrimeField>::from_rows(PrimeField(2), {{1, 1}, {1, 1}});
    auto rk2 = rank_and_kernel(ones);
    EXPECT_EQ(rk2.rank, 1u);
    ASSERT_EQ(rk2.kernel.size(), 1u);
    EXPECT_EQ(rk2.kernel[0], (std::vector<std::uint32_t>{1, 1}));
}

TEST(Matrix, RankNullityAndKernelOnRandom) {
    std::mt19937 rng(5);
    for (int i = 0; i < 40; ++i) {
        auto m = random_int_matrix(RationalField{}, rng, 5, 7, 3);
        auto rk = rank_and_kernel(m);
        EXPECT_EQ(rk.rank + rk.kernel.size(), 7u);
        for (const auto& v : rk.kernel)
            for (std::size_t r = 0; r < m.rows(); ++r) {
                Rational s = 0;
                for (std::size_t c = 0; c < m.cols(); ++c) s += m(r, c) * v[c];
                EXPECT_EQ(s, 0);
            }
    }
}

TEST(Matrix, RationalRankBoundsModularRank) {
    std::mt19937 rng(17);
    for (std::uint32_t p : {2u, 3u, 5u})
        for (int i = 0; i < 50; ++i) {
            std::uniform_int_distribution<long> d(-4, 4);
            std::vector<std::vector<long>> rows(4, std::vector<long>(5));
            for (auto& row : rows)
                for (auto& x : row) x = d(rng);
            auto q = ExactMatrix<RationalField>::from_rows(RationalField{}, rows);
            auto fp = ExactMatrix<PrimeField>::from_rows(PrimeField(p), rows);
            EXPECT_GE(rank(q), rank(fp));
        }
}

TEST(Matrix, RowReduceIsDeterministic) {
    std::mt19937 rng(3);
    auto m = random_int_matrix(RationalField{}, rng, 6, 6, 5);
    auto a = row_reduce(m), b = row_reduce(m);
    EXPECT_TRUE(a.reduced == b.reduced);
    EXPECT_EQ(a.pivot_columns, b.pivot_columns);
}

TEST(Matrix, SolveUnique) {
    auto m = ExactMatrix<RationalField>::from_rows(RationalField{}, {{2, 1}, {1, 3}});
    std::vector<Rational> rhs{3, 4};
    auto x = solve_unique(m, std::span<const Rational>(rhs));
    ASSERT_TRUE(x);
    EXPECT_EQ((*x)[0], 1);
    EXPECT_EQ((*x)[1], 1);
    auto sing = ExactMatrix<RationalField>::from_rows(RationalField{}, {{1, 2}, {2, 4}});
    EXPECT_FALSE(solve_unique(sing, std::span<const Rational>(rhs)));
}

TEST(Matrix, IncrementalBasisMatchesRank) {
    std::mt19937 rng(23);
    PrimeField f(3);
    for (int i = 0; i < 30; ++i) {
        auto m = random_int_matrix(f, rng, 6, 5, 2);
        IncrementalBasis<PrimeField> basis(f, 5);
        std::size_t grew = 0;
        for (std::size_t r = 0; r < m.rows(); ++r) {
            std::vector<std::uint32_t> v(m.row(r).begin(), m.row(r).end());
            grew += basis.insert(v);
            EXPECT_TRUE(basis.contains(v));
        }
        EXPECT_EQ(grew, rank(m));
        EXPECT_EQ(basis.rank(), rank(m));
    }
}

TEST(Interpolation, Examples) {
    auto sq = interpolate_integer_polynomial({{1, 1}, {2, 4}, {3, 9}});
    EXPECT_EQ(sq, RationalPoly(std::vector<Rational>{0, 0, 1}));
    auto c = interpolate_integer_polynomial({{2, 5}, {3, 5}});
    EXPECT_EQ(c, RationalPoly(std::vector<Rational>{5}));
    EXPECT_THROW(interpolate_integer_polynomial({{2, 1}, {2, 3}}), std::invalid_argument);
    EXPECT_THROW(interpolate_integer_polynomial({}), std::invalid_argument);
}

TEST(Interpolation, RoundTripDegreeEight) {
    std::mt19937 rng(29);
    std::uniform_int_distribution<long> d(-20, 20);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<Rational> coeffs(9);
        for (auto& c : coeffs) c = d(rng);
        coeffs[8] = 1 + trial;
        RationalPoly p(coeffs);
        std::vector<std::pair<BigInt, BigInt>> pts;
        for (long q : {2, 3, 4, 5, 7, 8, 9, 11, 13}) pts.emplace_back(q, p(Rational(q)).get_num());
        EXPECT_EQ(interpolate_integer_polynomial(pts), p);
    }
}
