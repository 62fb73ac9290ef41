#include <gtest/gtest.h>

#include <vector>

#include "cbi/family/sampling.hpp"

using namespace cbi;

namespace {

Rational q(long a, long b = 1) { return Rational(a, b); }

const ParamSet kBase{q(1), q(1, 2), q(1, 4), q(1, 4)};

std::vector<ParamSet> random_sets(std::uint64_t seed, int count) {
    RationalSampler rng(seed);
    std::vector<ParamSet> out;
    for (int i = 0; i < count; ++i) out.push_back(draw_generic_params(rng));
    return out;
}

// Values of I_0..I_n at t, from the recurrence with tau written out directly.
std::vector<Rational> cbi_values_at(const ParamSet& p, unsigned n, const Rational& t) {
    auto tau = [&](long k) {
        Rational g = p.rho1 + p.rho2 - p.r1 - p.r2;
        Rational m(k / 2);
        if (k % 2 == 0) {
            return -m * (m + p.rho1 - p.r1 + q(1, 2)) * (m + p.rho1 - p.r2 + q(1, 2)) * (m - p.r1 - p.r2) /
                   ((2 * m + g) * (2 * m + g + 1));
        }
        return -(m + g + 1) * (m + p.rho1 + p.rho2 + 1) * (m + p.rho2 - p.r1 + q(1, 2)) *
               (m + p.rho2 - p.r2 + q(1, 2)) / ((2 * m + g + 1) * (2 * m + g + 2));
    };
    std::vector<Rational> v = {q(1), t - p.rho2};
    for (unsigned k = 1; k < n; ++k) {
        Rational sign = k % 2 == 0 ? q(1) : q(-1);
        v.push_back((t - sign * p.rho2) * v[k] - tau(k) * v[k - 1]);
    }
    v.resize(n + 1);
    return v;
}

}  // namespace

TEST(BiCoefficients, Examples) {
    auto c0 = bi_coefficients(kBase, 0);
    EXPECT_EQ(c0.C, q(0));
    EXPECT_EQ(c0.A, q(25, 32));
    // A_1 = (1 + 2g + 1)(1 + 2rho1 + 2rho2 + 1)/(4(g+2)) with g = 1
    EXPECT_EQ(bi_coefficients(kBase, 1).A, q(4 * 5, 4 * 3));
}

TEST(BiCoefficients, SingularDenominator) {
    ParamSet p{q(0), q(-1), q(0), q(0)};  // g = -1
    EXPECT_THROW(bi_coefficients(p, 0), SingularParameter);
    try {
        bi_coefficients(p, 0);
    } catch (const SingularParameter& e) {
        EXPECT_NE(std::string(e.what()).find("n=0"), std::string::npos);
    }
}

TEST(BiPolynomial, LowDegrees) {
    EXPECT_EQ(bi_polynomial(kBase, 0), Poly(1));
    EXPECT_EQ(bi_polynomial(kBase, 1), Poly::linear(1, -kBase.rho1 + bi_coefficients(kBase, 0).A));
    // B_2 by one more step written out
    auto c0 = bi_coefficients(kBase, 0);
    auto c1 = bi_coefficients(kBase, 1);
    Poly b1 = Poly::linear(1, -kBase.rho1 + c0.A);
    Poly b2 = Poly::linear(1, -(kBase.rho1 - c1.A - c1.C)) * b1 - Poly(c0.A * c1.C);
    EXPECT_EQ(bi_polynomial(kBase, 2), b2);
}

TEST(CbiTau, Examples) {
    EXPECT_EQ(cbi_tau(kBase, 0), q(0));
    EXPECT_EQ(cbi_tau(kBase, 1), q(-15, 32));
    ParamSet p{q(3, 7), q(2, 5), q(1, 3), q(5, 3)};  // r1 + r2 = 2
    EXPECT_EQ(cbi_tau(p, 4), q(0));
}

TEST(CbiPolynomial, LowDegrees) {
    EXPECT_EQ(cbi_polynomial(kBase, 1), Poly::linear(1, q(-1, 2)));
    EXPECT_EQ(cbi_polynomial(kBase, 2), (Poly{q(7, 32), q(0), q(1)}));
    ParamSet p = random_sets(2, 1)[0];
    EXPECT_EQ(cbi_polynomial(p, 2), (Poly{-p.rho2 * p.rho2 - cbi_tau(p, 1), q(0), q(1)}));
}

TEST(CbiPolynomial, MatchesPointwiseRecurrence) {
    for (const auto& p : random_sets(41, 4)) {
        auto table = cbi_table(p, 12);
        for (long t = -3; t <= 3; ++t) {
            auto v = cbi_values_at(p, 12, q(t, 3));
            for (unsigned n = 0; n <= 12; ++n) EXPECT_EQ(table[n](q(t, 3)), v[n]);
        }
    }
}

TEST(PolyTable, MonicWithExactDegree) {
    for (const auto& p : random_sets(9, 3)) {
        for (Family f : {Family::BannaiIto, Family::Complementary}) {
            auto t = make_table(f, p, 15);
            ASSERT_EQ(t.polys.size(), 16u);
            for (unsigned n = 0; n <= 15; ++n) {
                EXPECT_EQ(t.polys[n].degree(), static_cast<long>(n));
                EXPECT_TRUE(t.polys[n].is_monic());
            }
        }
    }
}

TEST(Christoffel, Examples) {
    EXPECT_EQ(christoffel_transform(kBase, 0), Poly(1));
    EXPECT_EQ(christoffel_transform(kBase, 1), Poly::linear(1, q(-1, 2)));
}

TEST(KernelRoundTrip, RandomParams) {
    for (const auto& p : random_sets(101, 5)) {
        auto I = cbi_table(p, 12);
        auto B = bi_table(p, 12);
        for (unsigned n = 0; n <= 12; ++n) {
            EXPECT_EQ(christoffel_transform(p, n), I[n]) << to_string(p) << " n=" << n;
            EXPECT_EQ(geronimus_reconstruct(p, n), B[n]) << to_string(p) << " n=" << n;
        }
    }
}

TEST(KernelRatio, EqualsA) {
    EXPECT_EQ(kernel_ratio(kBase, 0), bi_coefficients(kBase, 0).A);
    EXPECT_EQ(kernel_ratio(kBase, 1), bi_coefficients(kBase, 1).A);
    for (const auto& p : random_sets(7, 3)) {
        for (unsigned n = 0; n <= 12; ++n) EXPECT_EQ(kernel_ratio(p, n), bi_coefficients(p, n).A);
    }
}

TEST(KernelRatio, Degenerate) {
    // B_1(rho1) = A_0 vanishes when rho1 = r1 - 1/2.
    ParamSet p{q(1, 4), q(1, 3), q(3, 4), q(1, 5)};
    EXPECT_THROW(kernel_ratio(p, 1), KernelDegenerate);
}

TEST(ClosedForm, LowDegrees) {
    EXPECT_EQ(cbi_closed_form(kBase, 0), Poly(1));
    EXPECT_EQ(cbi_closed_form(kBase, 1), Poly::linear(1, -kBase.rho2));
    EXPECT_EQ(cbi_closed_form(kBase, 2), cbi_polynomial(kBase, 2));
}

TEST(ClosedForm, MatchesRecurrence) {
    for (const auto& p : random_sets(77, 5)) {
        auto I = cbi_table(p, 10);
        for (unsigned n = 0; n <= 10; ++n) EXPECT_EQ(cbi_closed_form(p, n), I[n]) << to_string(p) << " n=" << n;
    }
}

TEST(ClosedForm, ParitySplit) {
    for (const auto& p : random_sets(13, 3)) {
        auto I = cbi_table(p, 12);
        for (unsigned n = 0; n <= 12; ++n) {
            Poly reflected = affine_substitute(I[n], -1, 0);
            if (n % 2 == 0) {
                EXPECT_EQ(reflected, I[n]);
            } else {
                EXPECT_EQ(Poly::linear(-1, p.rho2) * reflected, Poly::linear(1, p.rho2) * I[n]);
            }
        }
    }
}

TEST(ClosedForm, SingularParameter) {
    ParamSet p{q(-3), q(1), q(0), q(0)};  // rho1 + rho2 + 1 = -1
    EXPECT_THROW(cbi_closed_form(p, 6), SingularParameter);
}

TEST(Sampling, DeterministicAndGeneric) {
    RationalSampler a(99), b(99);
    for (int i = 0; i < 50; ++i) EXPECT_EQ(a.next(), b.next());
    RationalSampler rng(1);
    for (int i = 0; i < 5; ++i) {
        ParamSet p = draw_generic_params(rng);
        EXPECT_TRUE(is_generic(p));
        EXPECT_NE(p.rho2, q(0));
    }
}

TEST(Sampling, RejectsSingular) {
    EXPECT_FALSE(is_generic(ParamSet{q(0), q(-1), q(0), q(0)}));
    ParamSet p{q(1, 3), q(1, 2), q(1, 5), q(2, 7)};
    GenericityOptions opt;
    opt.avoid_grid_poles = true;
    EXPECT_FALSE(is_generic(p, opt));
}
