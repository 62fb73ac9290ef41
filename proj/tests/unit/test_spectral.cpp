#include <gtest/gtest.h>

#include <tuple>
#include <vector>

#include "cbi/family/sampling.hpp"
#include "cbi/spectral/orthogonality.hpp"

using namespace cbi;

namespace {

Rational q(long a, long b = 1) { return Rational(a, b); }

// Closed-form tau_n under the positive even parametrization, g = (b+c-1)/2.
Rational even_tau(const Rational& a, const Rational& b, const Rational& c, long N, long n) {
    Rational g = (b + c - 1) / 2;
    Rational nn(n), NN(N);
    Rational den = 16 * (nn + g) * (nn + g + 1);
    if (n % 2 == 0) return nn * (NN - nn + a) * (nn + c + 1) * (nn + b + c + NN + 1) / den;
    return (NN - nn + 1) * (nn + b - 1) * (nn + b + c) * (nn + a + b + c + NN) / den;
}

// Closed-form tau_n under the positive odd parametrization, g = (zeta+chi-1)/2.
Rational odd_tau(const Rational& z, const Rational& x, const Rational& c, long N, long n) {
    Rational g = (z + c - 1) / 2;
    Rational nn(n), NN(N);
    Rational den = 16 * (nn + g) * (nn + g + 1);
    if (n % 2 == 0) return nn * (NN - nn + 1) * (nn + c) * (nn + z + x + c + NN + 1) / den;
    return (NN - nn + x + 1) * (nn + z) * (nn + z + c) * (nn + z + c + NN + 1) / den;
}

const std::vector<std::tuple<Rational, Rational, Rational>> kTriples = {
    {q(1), q(1), q(1)}, {q(2), q(1, 2), q(3)}, {q(1, 3), q(2), q(1)}};

}  // namespace

TEST(PositiveParams, EvenMatchesClosedFormTau) {
    for (auto [a, b, c] : kTriples) {
        for (unsigned N : {2u, 4u, 6u}) {
            ParamSet p = positive_even_params(a, b, c, N);
            EXPECT_EQ(p.g(), (b + c - 1) / 2);
            for (long n = 1; n <= static_cast<long>(N) + 1; ++n) EXPECT_EQ(cbi_tau(p, n), even_tau(a, b, c, N, n));
            for (long n = 1; n <= static_cast<long>(N); ++n) EXPECT_GT(cbi_tau(p, n), q(0));
            EXPECT_EQ(cbi_tau(p, N + 1), q(0));
            EXPECT_EQ(classify_truncation(p, N).tag, TruncationTag::EvenCase1);
        }
    }
}

TEST(PositiveParams, OddMatchesClosedFormTau) {
    for (auto [z, x, c] : kTriples) {
        for (unsigned N : {3u, 5u}) {
            ParamSet p = positive_odd_params(z, x, c, N);
            EXPECT_EQ(p.g(), (z + c - 1) / 2);
            for (long n = 1; n <= static_cast<long>(N) + 1; ++n) EXPECT_EQ(cbi_tau(p, n), odd_tau(z, x, c, N, n));
            EXPECT_EQ(cbi_tau(p, N + 1), q(0));
            EXPECT_EQ(classify_truncation(p, N).tag, TruncationTag::OddCase_ii);
        }
    }
}

TEST(PositiveParams, RejectsBadInput) {
    EXPECT_THROW(positive_even_params(q(0), q(1), q(1), 2), DomainError);
    EXPECT_THROW(positive_even_params(q(1), q(1), q(1), 3), DomainError);
    EXPECT_THROW(positive_odd_params(q(1), q(-1), q(1), 3), DomainError);
    EXPECT_THROW(positive_odd_params(q(1), q(1), q(1), 1), DomainError);
}

TEST(Truncation, Classification) {
    RationalSampler rng(5);
    ParamSet generic = draw_generic_params(rng);
    EXPECT_THROW(classify_truncation(generic, 4), NotTruncated);
    // Even 2: rho2 - r2 = -(N+1)/2.
    ParamSet e2{q(2, 7), q(1, 3), q(1, 9), q(1, 3) + q(5, 2)};
    EXPECT_EQ(classify_truncation(e2, 4).tag, TruncationTag::EvenCase2);
    ParamSet e3{q(-3) - q(1, 5), q(1, 5), q(1, 7), q(2, 9)};
    EXPECT_EQ(classify_truncation(e3, 4).tag, TruncationTag::EvenCase3);
    ParamSet oi{q(1, 5), q(2, 7), q(1, 5) + q(5, 2), q(1, 9)};
    EXPECT_EQ(classify_truncation(oi, 3).tag, TruncationTag::OddCase_i);
    ParamSet oiii{q(1, 5), q(2, 7), q(1, 9), q(1, 5) + q(5, 2)};
    EXPECT_EQ(classify_truncation(oiii, 3).tag, TruncationTag::OddCase_iii);
    // g = -(N+2)/2
    ParamSet e4{q(1, 3), q(1, 6), q(3, 2), q(2)};
    EXPECT_THROW(classify_truncation(e4, 4), InadmissibleTruncation);
}

TEST(SpectralGrid, Examples) {
    ParamSet p = positive_even_params(q(1), q(1), q(1), 4);
    auto c = classify_truncation(p, 4);
    auto grid = spectral_grid(c, p);
    ASSERT_EQ(grid.size(), 5u);
    EXPECT_EQ(grid[0], p.rho2);
    EXPECT_EQ(grid[1], -p.rho2 - 1);
    ParamSet o = positive_odd_params(q(1), q(1), q(1), 3);
    auto og = spectral_grid(classify_truncation(o, 3), o);
    EXPECT_EQ(og[0], o.r1 - q(1, 2));
}

TEST(SpectralGrid, RootsOfTopPolynomial) {
    for (auto [a, b, c] : kTriples) {
        ParamSet p = positive_even_params(a, b, c, 6);
        auto grid = spectral_grid(classify_truncation(p, 6), p);
        Poly top = cbi_polynomial(p, 7);
        for (const auto& x : grid) EXPECT_EQ(top(x), q(0));
    }
}

TEST(Weights, Examples) {
    ParamSet p{q(3, 7), q(-2, 5), q(5, 3), q(1, 11)};
    EXPECT_EQ(bi_weight(p, 0), q(1));
    Rational h(1, 2);
    EXPECT_EQ(bi_weight(p, 1), -(p.rho1 - p.r1 + h) * (p.rho1 - p.r2 + h) / ((p.rho1 + p.r1 + h) * (p.rho1 + p.r2 + h)));
    // k = 2: l = 1, v = 0
    Rational w2 = (p.rho1 - p.r1 + h) * (p.rho1 - p.r2 + h) * (p.rho1 + p.rho2 + 1) * (2 * p.rho1 + 1) /
                  ((p.rho1 + p.r1 + h) * (p.rho1 + p.r2 + h) * (p.rho1 - p.rho2 + 1));
    EXPECT_EQ(bi_weight(p, 2), w2);
}

TEST(Weights, CbiExamples) {
    ParamSet p = positive_even_params(q(1), q(1), q(1), 2);
    auto c = classify_truncation(p, 2);
    EXPECT_EQ(cbi_weight(c, p, 0), p.rho2 - p.rho1);
    ParamSet o = positive_odd_params(q(1), q(1), q(1), 3);
    auto co = classify_truncation(o, 3);
    EXPECT_EQ(cbi_weight(co, o, 0), o.r1 - q(1, 2) - o.rho1);
}

TEST(Orthogonality, SmallEvenCase) {
    ParamSet p = positive_even_params(q(1), q(1), q(1), 2);
    auto rep = verify_orthogonality(classify_truncation(p, 2), p);
    EXPECT_EQ(rep.gram[0][1], q(0));
    EXPECT_EQ(rep.gram[1][1] / rep.gram[0][0], cbi_tau(p, 1));
    Rational sum(0);
    for (const auto& w : rep.weights) sum += w;
    EXPECT_EQ(rep.gram[0][0], sum);
}

TEST(Orthogonality, PositiveSweeps) {
    for (auto [a, b, c] : kTriples) {
        for (unsigned N : {2u, 4u, 6u}) {
            ParamSet p = positive_even_params(a, b, c, N);
            auto rep = verify_orthogonality(classify_truncation(p, N), p);
            EXPECT_TRUE(rep.passed());
            EXPECT_EQ(rep.gram_offdiag_max_abs, q(0));
            EXPECT_TRUE(rep.positive_taus());
            EXPECT_NE(rep.weight_sign, 0);
        }
        for (unsigned N : {3u, 5u}) {
            ParamSet p = positive_odd_params(a, b, c, N);
            auto rep = verify_orthogonality(classify_truncation(p, N), p);
            EXPECT_TRUE(rep.passed());
            EXPECT_TRUE(rep.positive_taus());
            EXPECT_NE(rep.weight_sign, 0);
        }
    }
}

TEST(Orthogonality, OtherCasesHoldAlgebraically) {
    ParamSet e2{q(2, 7), q(1, 3), q(1, 9), q(1, 3) + q(5, 2)};
    ParamSet e3{q(-3) - q(1, 5), q(1, 5), q(1, 7), q(2, 9)};
    ParamSet oi{q(1, 5), q(2, 7), q(1, 5) + q(5, 2), q(1, 9)};
    ParamSet oiii{q(1, 5), q(2, 7), q(1, 9), q(1, 5) + q(5, 2)};
    EXPECT_TRUE(compute_orthogonality(classify_truncation(e2, 4), e2).passed());
    EXPECT_TRUE(compute_orthogonality(classify_truncation(e3, 4), e3).passed());
    EXPECT_TRUE(compute_orthogonality(classify_truncation(oi, 3), oi).passed());
    EXPECT_TRUE(compute_orthogonality(classify_truncation(oiii, 3), oiii).passed());
}

TEST(Orthogonality, WitnessOnFailure) {
    ParamSet p = positive_even_params(q(1), q(1), q(1), 4);
    auto c = classify_truncation(p, 4);
    ParamSet wrong = p;
    wrong.rho2 += q(1, 3);  // breaks the truncation condition
    auto rep = compute_orthogonality(c, wrong);
    EXPECT_FALSE(rep.passed());
    EXPECT_THROW(verify_orthogonality(c, wrong), VerificationFailure);
}

TEST(BiOrthogonality, TruncatedCases) {
    const std::vector<std::tuple<Rational, Rational, Rational, Rational>> bases = {
        {q(1, 5), q(2, 7), q(1, 9), q(3, 11)}, {q(3, 7), q(-2, 5), q(1, 11), q(5, 13)}};
    for (auto [rho1, rho2, r2, extra] : bases) {
        ParamSet even1{rho1, rho2, rho1 + q(5, 2), r2};
        EXPECT_TRUE(compute_bi_orthogonality(even1, 4).passed()) << to_string(even1);
        ParamSet even3{rho1, rho2, rho2 + q(5, 2), r2};
        EXPECT_TRUE(compute_bi_orthogonality(even3, 4).passed()) << to_string(even3);
        ParamSet odd2{rho1, rho2, r2, q(2) - r2};
        EXPECT_TRUE(compute_bi_orthogonality(odd2, 3).passed()) << to_string(odd2);
        ParamSet odd1{rho1, -q(2) - rho1, r2, extra};
        EXPECT_TRUE(compute_bi_orthogonality(odd1, 3).passed()) << to_string(odd1);
    }
    EXPECT_THROW(compute_bi_orthogonality(ParamSet{q(1, 5), q(2, 7), q(1, 9), q(3, 11)}, 4), NotTruncated);
}
