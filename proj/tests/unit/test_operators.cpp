#include <gtest/gtest.h>

#include <vector>

#include "cbi/family/sampling.hpp"
#include "cbi/operators/eigen.hpp"

using namespace cbi;

namespace {

Rational q(long a, long b = 1) { return Rational(a, b); }

const ParamSet kBase{q(1), q(1, 2), q(1, 4), q(1, 4)};
const ParamSet kOther{q(3, 7), q(-2, 5), q(5, 3), q(1, 11)};

std::vector<ParamSet> random_sets(std::uint64_t seed, int count, bool avoid_poles = false) {
    RationalSampler rng(seed);
    GenericityOptions opt;
    opt.avoid_grid_poles = avoid_poles;
    std::vector<ParamSet> out;
    for (int i = 0; i < count; ++i) out.push_back(draw_generic_params(rng, opt));
    return out;
}

Poly random_poly(RationalSampler& rng, int degree) {
    std::vector<Rational> c;
    for (int i = 0; i <= degree; ++i) c.push_back(rng.next());
    return Poly(c);
}

// Direct pointwise transcription of the D_0 coefficients.
struct Direct {
    Rational A, B, C, D;
};
Direct direct_coefficients(const ParamSet& p, const Rational& x) {
    Rational om = 4 * p.rho1 - 4 * (p.r1 + p.r2) * p.rho1 + 4 * p.r1 * p.r2 - 6 * (p.r1 + p.r2) + 5;
    Rational A = (x + p.rho1 + 1) * (x + p.rho2 + 1) * (2 * x - 2 * p.r1 + 1) * (2 * x - 2 * p.r2 + 1) /
                 (8 * (x + 1) * (2 * x + 1));
    Rational B = (x - p.rho2) * (x - p.rho1 - 1) * (2 * x + 2 * p.r1 - 1) * (2 * x + 2 * p.r2 - 1) /
                 (8 * x * (2 * x - 1));
    Rational C = (x - p.rho2) * (4 * x * x + om) / (8 * x) -
                 (x - p.rho2) * (x + p.rho1 + 1) * (2 * x - 2 * p.r1 + 1) * (2 * x - 2 * p.r2 + 1) /
                     (8 * x * (2 * x + 1)) -
                 B;
    Rational D = p.rho2 * (x + p.rho1 + 1) * (2 * x - 2 * p.r1 + 1) * (2 * x - 2 * p.r2 + 1) /
                 (8 * x * (x + 1) * (2 * x + 1));
    return {A, B, C, D};
}

// (D_0 f)(x) evaluated straight from its definition.
Rational direct_D0(const ParamSet& p, const Poly& f, const Rational& x) {
    auto c = direct_coefficients(p, x);
    return c.A * (f(x + 1) - f(x)) + c.B * (f(x - 1) - f(x)) + c.C * (f(-x) - f(x)) + c.D * (f(-x - 1) - f(x));
}

}  // namespace

TEST(ShiftReflect, RewritingRules) {
    auto R = ShiftReflectOp::reflection();
    auto T = ShiftReflectOp::shift(q(3, 2));
    EXPECT_EQ(R * T, ShiftReflectOp::term(RatFunc(1), q(-3, 2), true));
    EXPECT_EQ(R * R, ShiftReflectOp::identity());
    EXPECT_EQ(T * ShiftReflectOp::shift(q(-3, 2)), ShiftReflectOp::identity());
}

TEST(ShiftReflect, ReflectedTermsCompose) {
    RatFunc c(Poly::linear(1, 2));
    RatFunc d(Poly{q(0), q(0), q(1)});
    Rational a(1, 3), b(2);
    auto lhs = ShiftReflectOp::term(c, a, true) * ShiftReflectOp::term(d, b, true);
    // c(x) d(-x-a) T^{a-b}
    auto expected = ShiftReflectOp::term(c * d.substitute(-1, -a), a - b, false);
    EXPECT_EQ(lhs, expected);
    EXPECT_EQ(lhs.size(), 1u);
}

TEST(ShiftReflect, FunctionCommutesThroughShift) {
    RatFunc c(Poly::x());
    auto lhs = ShiftReflectOp::shift(q(1)) * ShiftReflectOp::multiplication(c);
    EXPECT_EQ(lhs, ShiftReflectOp::term(RatFunc(Poly::linear(1, 1)), q(1), false));
}

TEST(ShiftReflect, NoZeroTerms) {
    auto op = ShiftReflectOp::shift(q(1)) - ShiftReflectOp::shift(q(1));
    EXPECT_TRUE(op.is_zero());
    EXPECT_TRUE(op.is_scalar());
    EXPECT_EQ(op.scalar_value(), q(0));
}

TEST(ShiftReflect, ApplyIdentityAndAction) {
    Poly p{q(1), q(2), q(3)};
    EXPECT_EQ(ShiftReflectOp::identity().apply(p), p);
    EXPECT_EQ(ShiftReflectOp::term(RatFunc(1), q(1), true).apply(Poly::x()), Poly::linear(-1, -1));
}

TEST(ShiftReflect, ApplyCombinesOverCommonDenominator) {
    // Each term of (1/x)(1 - R) is non-polynomial on x, the sum is 2.
    RatFunc inv(Poly(1), Poly::x());
    auto op = ShiftReflectOp::multiplication(inv) - inv * ShiftReflectOp::reflection();
    EXPECT_EQ(op.apply(Poly::x()), Poly(2));
    EXPECT_EQ(op.apply(Poly::monomial(1, 2)), Poly());
    RatFunc shifted(Poly(1), Poly::linear(1, -1));
    auto bad = ShiftReflectOp::multiplication(shifted) - shifted * ShiftReflectOp::reflection();
    EXPECT_THROW(bad.apply(Poly::x()), NonPolynomialResult);
}

TEST(ShiftReflect, CompositionSoundness) {
    RationalSampler rng(2024);
    for (int trial = 0; trial < 20; ++trial) {
        ShiftReflectOp a, b;
        for (int j = 0; j < 3; ++j) {
            a.add_term({Rational(static_cast<long>(j) - 1, 2), j % 2 == 0}, RatFunc(random_poly(rng, 2)));
            b.add_term({Rational(static_cast<long>(j)), j % 2 == 1}, RatFunc(random_poly(rng, 1)));
        }
        Poly p = random_poly(rng, 5);
        EXPECT_EQ((a * b).apply(p), a.apply(b.apply(p)));
        EXPECT_EQ(((a * b) * a).apply(p), (a * (b * a)).apply(p));
    }
}

TEST(D0, CoefficientsMatchDirectFormula) {
    for (const auto& p : {kBase, kOther}) {
        auto op = build_D0(p);
        for (long t : {2, 3, 5, 7, -4}) {
            Rational x(t, 3);
            auto d = direct_coefficients(p, x);
            EXPECT_EQ(op.coefficient(1, false)(x), d.A);
            EXPECT_EQ(op.coefficient(-1, false)(x), d.B);
            EXPECT_EQ(op.coefficient(0, true)(x), d.C);
            EXPECT_EQ(op.coefficient(1, true)(x), d.D);
            EXPECT_EQ(op.coefficient(0, false)(x), -(d.A + d.B + d.C + d.D));
        }
    }
}

TEST(D0, ActionMatchesDirectEvaluation) {
    RationalSampler rng(8);
    auto op = build_D0(kOther);
    for (int trial = 0; trial < 5; ++trial) {
        Poly f = random_poly(rng, 6);
        Poly g = op.apply(f);
        for (long t : {2, 5, 9}) EXPECT_EQ(g(q(t, 7)), direct_D0(kOther, f, q(t, 7)));
    }
}

TEST(D0, LowDegreeExamples) {
    auto D = build_D0(kBase);
    EXPECT_EQ(D.apply(Poly(1)), Poly());
    EXPECT_EQ(D.apply(cbi_polynomial(kBase, 1)), Poly());
    Poly I2 = cbi_polynomial(kBase, 2);
    EXPECT_EQ(D.apply(I2), I2 * (kBase.g() + 2));
    EXPECT_EQ(build_D0(kBase), build_D0(kBase));
}

TEST(U, Examples) {
    auto U = build_U(kBase);
    EXPECT_EQ(U.apply(Poly(1)), Poly());
    EXPECT_EQ(U.apply(Poly::monomial(1, 2)), Poly());
    Poly I1 = cbi_polynomial(kBase, 1);
    EXPECT_EQ(U.apply(I1), I1);
    EXPECT_EQ(U.coefficient(0, true), -RatFunc(Poly::linear(1, -kBase.rho2), Poly::linear(2, 0)));
}

TEST(DAlpha, FamilyStructure) {
    RationalSampler rng(4);
    for (const auto& p : random_sets(55, 3)) {
        Rational a = rng.next();
        EXPECT_EQ(build_D_alpha(p, a), build_D0(p) + a * build_U(p));
        EXPECT_EQ(build_D_alpha(p, 0), build_D0(p));
        EXPECT_NE(build_D_alpha(p, 1), build_D0(p));
    }
    Rational a(2, 3);
    Poly I1 = cbi_polynomial(kBase, 1);
    EXPECT_EQ(build_D_alpha(kBase, a).apply(I1), I1 * a);
}

TEST(DAlpha, EigenIdentity) {
    RationalSampler rng(12);
    for (const auto& p : random_sets(303, 3)) {
        for (int j = 0; j < 2; ++j) {
            auto rep = verify_eigen(p, rng.next(), 16);
            EXPECT_TRUE(rep.passed()) << to_string(p) << " first failing n=" << rep.failures.front().n;
        }
    }
}

TEST(Eigenvalues, Examples) {
    Rational a(5, 7);
    ParamsT<Rational> p = kOther;
    EXPECT_EQ(eigenvalue_lambda(p, a, 0), q(0));
    EXPECT_EQ(eigenvalue_lambda(p, a, 1), a);
    EXPECT_EQ(eigenvalue_lambda(p, a, 2), p.g() + 2);
    EXPECT_EQ(eigenvalue_kappa(kOther, 0), q(0));
    Rational g = kOther.g();
    EXPECT_EQ(eigenvalue_kappa(kOther, 1), g * g + 2 * g + q(5, 4));
    for (long n = 0; n <= 20; ++n) EXPECT_EQ(eigenvalue_kappa(kOther, n), eigenvalue_lambda(p, kappa_offset(kOther), n));
}

TEST(Hidden, Parity) {
    for (const auto& p : random_sets(66, 2)) EXPECT_TRUE(verify_hidden(p, 20).passed());
}

TEST(H, Examples) {
    auto H = build_H_y(kBase);
    EXPECT_EQ(H.apply(Poly(1)), Poly());
    Poly f = affine_substitute(cbi_polynomial(kBase, 1), 1, q(-1, 4));
    EXPECT_EQ(H.apply(f), f * eigenvalue_kappa(kBase, 1));
    EXPECT_TRUE(H.coefficient(q(1, 2), true) != RatFunc());
    EXPECT_EQ(H.size(), 5u);
}

TEST(H, SpectrumAndConjugation) {
    for (const auto& p : {kBase, kOther}) {
        EXPECT_TRUE(verify_h_spectrum(p, 20).passed()) << to_string(p);
        EXPECT_TRUE(h_conjugation_defect(p).is_zero()) << h_conjugation_defect(p).str();
    }
}

TEST(Grid, Examples) {
    Rational h(2, 9);
    EXPECT_EQ(bi_grid(h, 0), h);
    EXPECT_EQ(bi_grid(h, 1), -h - 1);
    EXPECT_EQ(alternate_grid(h, 0), h - q(1, 2));
    for (long k = -10; k <= 10; ++k) EXPECT_EQ(alternate_grid(h, k), bi_grid(h - q(1, 2), -k));
}

TEST(Grid, ActionTable) {
    Rational h(3, 11);
    for (GridKind kind : {GridKind::Standard, GridKind::Alternate}) {
        for (long k = -10; k <= 10; ++k) {
            Rational x = grid_point(kind, h, k);
            bool even = k % 2 == 0;
            // T^+, T^-, R, T^+R applied to x_k.
            EXPECT_EQ(x + 1, grid_point(kind, h, k + grid_action_offset(kind, even, 1, false)));
            EXPECT_EQ(x - 1, grid_point(kind, h, k + grid_action_offset(kind, even, -1, false)));
            EXPECT_EQ(-x, grid_point(kind, h, k + grid_action_offset(kind, even, 0, true)));
            EXPECT_EQ(-x - 1, grid_point(kind, h, k + grid_action_offset(kind, even, 1, true)));
        }
    }
    // Literal table on the standard grid.
    EXPECT_EQ(bi_grid(h, 4) + 1, bi_grid(h, 6));
    EXPECT_EQ(bi_grid(h, 3) + 1, bi_grid(h, 1));
    EXPECT_EQ(-bi_grid(h, 4), bi_grid(h, 3));
    EXPECT_EQ(-bi_grid(h, 3) - 1, bi_grid(h, 2));
}

TEST(FiveTerm, MatchesPointwiseOperator) {
    for (const auto& p : random_sets(808, 2, true)) {
        const auto c = d0_coefficients(p);
        auto D = build_D0(p);
        Poly I5 = cbi_polynomial(p, 5);
        for (GridKind kind : {GridKind::Standard, GridKind::Alternate}) {
            Rational h = default_grid_parameter(p, kind);
            for (long k = -6; k <= 6; ++k) {
                auto f = five_term_coefficients(c, p.rho2, 0, kind, h, k);
                Rational lhs = f.u * I5(grid_point(kind, h, k + 2)) + f.v * I5(grid_point(kind, h, k + 1)) +
                               f.m * I5(grid_point(kind, h, k)) + f.t * I5(grid_point(kind, h, k - 1)) +
                               f.r * I5(grid_point(kind, h, k - 2));
                EXPECT_EQ(lhs, D.apply_at(I5, grid_point(kind, h, k)));
            }
        }
    }
}

TEST(FiveTerm, ZeroResidualBothGrids) {
    for (const auto& p : random_sets(909, 3, true)) {
        auto table = make_table(Family::Complementary, p, 12);
        for (GridKind kind : {GridKind::Standard, GridKind::Alternate}) {
            auto rep = five_term_apply(p, 0, table, default_grid_parameter(p, kind), -8, 8, kind);
            EXPECT_TRUE(rep.passed()) << to_string(p);
            auto rep_a = five_term_apply(p, q(3, 5), table, default_grid_parameter(p, kind), -8, 8, kind);
            EXPECT_TRUE(rep_a.passed()) << to_string(p);
        }
    }
}

TEST(FiveTerm, DetectsWrongEigenvalue) {
    auto table = make_table(Family::Complementary, kOther, 4);
    table.polys[3] = table.polys[3] + Poly(1);
    auto rep = five_term_apply(kOther, 0, table, q(1, 7), -2, 2);
    EXPECT_FALSE(rep.passed());
    EXPECT_EQ(rep.failures.front().n, 3);
}

TEST(FiveTerm, GridPole) {
    auto table = make_table(Family::Complementary, kOther, 3);
    try {
        five_term_apply(kOther, 0, table, q(0), -2, 2);
        FAIL();
    } catch (const GridPole& e) {
        EXPECT_EQ(e.k(), -2);
    }
}
