#pragma once

/**
 * @file dual_hahn.hpp
 * @brief Dual -1 Hahn polynomials as the rho1 -> infinity limit of the CBI family.
 */

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "cbi/algebra/realization.hpp"

namespace cbi {

struct DualHahnParams {
    Rational rho2;
    Rational r1;
    Rational r2;
};

inline std::string to_string(const DualHahnParams& p) {
    return "rho2=" + p.rho2.str() + " r1=" + p.r1.str() + " r2=" + p.r2.str();
}

/// The CBI parameters with rho1 kept as the indeterminate.
inline ParamsT<RatFunc> symbolic_rho1(const DualHahnParams& p) {
    return {RatFunc::x(), RatFunc(p.rho2), RatFunc(p.r1), RatFunc(p.r2)};
}

/// sigma_{2m} = -m(m - r1 - r2), sigma_{2m+1} = -(m + rho2 - r1 + 1/2)(m + rho2 - r2 + 1/2).
inline Rational dual_m1_hahn_sigma(const DualHahnParams& p, long n) {
    const Rational m(n / 2);
    const Rational h(1, 2);
    if (n % 2 == 0) return -m * (m - p.r1 - p.r2);
    return -(m + p.rho2 - p.r1 + h) * (m + p.rho2 - p.r2 + h);
}

/// Q_0..Q_n from Q_{n+1} = (x - (-1)^n rho2) Q_n - sigma_n Q_{n-1}.
inline std::vector<Poly> dual_m1_hahn_table(const DualHahnParams& p, unsigned n) {
    std::vector<Poly> out{Poly(Rational(1))};
    if (n == 0) return out;
    out.push_back(Poly::linear(1, -p.rho2));
    for (unsigned k = 1; k < n; ++k) {
        const long lk = static_cast<long>(k);
        out.push_back(Poly::linear(1, -(parity_sign(lk) * p.rho2)) * out[k] - out[k - 1] * dual_m1_hahn_sigma(p, lk));
    }
    return out;
}

/// Q_n from the 3F2 closed forms.
inline Poly dual_m1_hahn_poly(const DualHahnParams& p, unsigned n) {
    const unsigned m = n / 2;
    const bool odd = n % 2 == 1;
    const Rational o = odd ? Rational(1) : Rational(0);
    const Rational h(1, 2);
    std::array<Rational, 2> dens = {p.rho2 - p.r1 + h + o, p.rho2 - p.r2 + h + o};
    for (const auto& d : dens) {
        for (unsigned k = 0; k < m; ++k) {
            if ((d + Rational(static_cast<long>(k))).is_zero()) {
                throw SingularParameter("dual -1 Hahn 3F2 denominator vanishes at n=" + std::to_string(n));
            }
        }
    }
    const Rational xi = pochhammer(dens[0], m) * pochhammer(dens[1], m);
    std::array<Poly, 2> nums = {Poly::linear(1, p.rho2 + o), Poly::linear(-1, p.rho2 + o)};
    Poly f = pfq_polynomial(m, nums, dens, Rational(1)) * xi;
    return odd ? Poly::linear(1, -p.rho2) * f : f;
}

/// nu_{2m} = m, nu_{2m+1} = m + alpha.
inline Rational dual_hahn_nu(const Rational& alpha, long n) {
    const Rational m(n / 2);
    return n % 2 == 0 ? m : m + alpha;
}

struct EOperatorCoefficients {
    RatFunc I, J, K, L;
};

inline EOperatorCoefficients e_coefficients(const DualHahnParams& p) {
    const RatFunc x = RatFunc::x();
    auto lin = [](const Rational& a, const Rational& b) { return RatFunc(Poly::linear(a, b)); };
    const RatFunc eight(8);
    EOperatorCoefficients c;
    c.I = lin(1, p.rho2 + 1) * lin(2, 1 - 2 * p.r1) * lin(2, 1 - 2 * p.r2) / (eight * lin(1, 1) * lin(2, 1));
    c.J = lin(-1, p.rho2) * lin(2, 2 * p.r1 - 1) * lin(2, 2 * p.r2 - 1) / (eight * x * lin(2, -1));
    c.K = lin(1, -p.rho2) * (RatFunc(4) * x * x + RatFunc(4 * p.r1 * p.r2 - 1)) /
          (RatFunc(4) * x * (RatFunc(4) * x * x - RatFunc(1)));
    c.L = RatFunc(p.rho2) * lin(2, 1 - 2 * p.r1) * lin(2, 1 - 2 * p.r2) / (eight * x * lin(1, 1) * lin(2, 1));
    return c;
}

/// E^(a) = I T^+ + J T^- + K R + L T^+R - (I+J+K+L) 1 + a (x - rho2)/(2x) (1 - R).
inline ShiftReflectOp build_E_alpha(const DualHahnParams& p, const Rational& alpha) {
    auto c = e_coefficients(p);
    ParamSet shape{Rational(0), p.rho2, p.r1, p.r2};
    return assemble_five_term(c.I, c.J, c.K, c.L) + alpha * build_U(shape);
}

struct DualHahnLimitReport {
    DualHahnParams params;
    Rational alpha;
    unsigned n_max = 0;
    std::vector<Rational> tau_limits;  // lim tau_n, n = 1..n_max
    std::vector<Rational> sigmas;
    std::optional<unsigned> tau_witness;
    std::vector<Rational> samples;
    std::size_t operator_checks = 0;
    std::optional<std::string> operator_witness;
    std::optional<unsigned> eigen_witness;        // E Q_n != nu_n Q_n
    std::optional<unsigned> closed_form_witness;  // 3F2 != recurrence

    bool passed() const { return !tau_witness && !operator_witness && !eigen_witness && !closed_form_witness; }
};

namespace detail {

inline long rational_degree(const RatFunc& f) { return std::max(f.num().degree(), f.den().degree()); }

inline long operator_degree(const ShiftReflectOp& op) {
    long d = 0;
    for (const auto& [key, c] : op.terms()) d = std::max(d, rational_degree(c));
    return d;
}

inline bool any_pole(const ShiftReflectOp& op, const Rational& x) {
    for (const auto& [key, c] : op.terms()) {
        if (c.has_pole_at(x)) return true;
    }
    return false;
}

}  // namespace detail

/// Sample points off the coefficient poles of E^(a) and of D_a; more than twice the coefficient degree.
inline std::vector<Rational> dual_hahn_samples(const DualHahnParams& p, const Rational& alpha) {
    const ShiftReflectOp E = build_E_alpha(p, alpha);
    const ShiftReflectOp D = build_D_alpha(ParamSet{Rational(1, 3), p.rho2, p.r1, p.r2}, alpha);
    const long need = 2 * (detail::operator_degree(E) + detail::operator_degree(D)) + 2;
    std::vector<Rational> out;
    for (long k = 2; static_cast<long>(out.size()) < need; ++k) {
        const Rational x(k);
        if (detail::any_pole(E, x) || detail::any_pole(D, x)) continue;
        out.push_back(x);
    }
    return out;
}

/**
 * (a) lim tau_n = sigma_n, exactly in rho1; (b) per term and sample x, lim D_{a rho1}/rho1 = E^(a);
 * (c) E^(a) Q_n = nu_n Q_n and the 3F2 forms agree with the recurrence, n <= n_max.
 */
inline DualHahnLimitReport verify_dual_hahn_limit(const DualHahnParams& p, const Rational& alpha, unsigned n_max,
                                                  std::vector<Rational> samples = {}) {
    DualHahnLimitReport rep;
    rep.params = p;
    rep.alpha = alpha;
    rep.n_max = n_max;
    const ParamsT<RatFunc> sym = symbolic_rho1(p);
    for (unsigned n = 1; n <= n_max; ++n) {
        const RatFunc t = cbi_tau(sym, static_cast<long>(n));
        rep.tau_limits.push_back(limit_at_infinity(t.num(), t.den()));
        rep.sigmas.push_back(dual_m1_hahn_sigma(p, static_cast<long>(n)));
        if (rep.tau_limits.back() != rep.sigmas.back() && !rep.tau_witness) rep.tau_witness = n;
    }

    rep.samples = samples.empty() ? dual_hahn_samples(p, alpha) : std::move(samples);
    const ShiftReflectOp E = build_E_alpha(p, alpha);
    const RatFunc X = RatFunc::x();
    const RatFunc a_rho1 = RatFunc(alpha) * X;
    for (const auto& x : rep.samples) {
        const auto c = d0_coefficients(sym, RatFunc(x));
        const RatFunc u(u_coefficient(p.rho2)(x));
        const std::array<std::pair<OpKey, RatFunc>, 5> terms = {{
            {{Rational(1), false}, c.A},
            {{Rational(-1), false}, c.B},
            {{Rational(0), true}, c.C - a_rho1 * u},
            {{Rational(1), true}, c.D},
            {{Rational(0), false}, -(c.A + c.B + c.C + c.D) + a_rho1 * u},
        }};
        for (const auto& [key, coef] : terms) {
            const RatFunc scaled = coef / X;
            const Rational lim = limit_at_infinity(scaled.num(), scaled.den());
            const Rational expected = E.coefficient(key.shift, key.reflect)(x);
            ++rep.operator_checks;
            if (lim != expected && !rep.operator_witness) {
                rep.operator_witness = "term (shift " + key.shift.str() + (key.reflect ? ", R" : "") + ") at x=" +
                                       x.str() + ": limit " + lim.str() + " vs " + expected.str();
            }
        }
    }

    const auto Q = dual_m1_hahn_table(p, n_max);
    for (unsigned n = 0; n <= n_max; ++n) {
        if (E.apply(Q[n]) != Q[n] * dual_hahn_nu(alpha, static_cast<long>(n)) && !rep.eigen_witness) rep.eigen_witness = n;
        if (dual_m1_hahn_poly(p, n) != Q[n] && !rep.closed_form_witness) rep.closed_form_witness = n;
    }
    return rep;
}

/// gamma_1..gamma_5, stored in the d1..d5 slots.
inline StructureConstants dual_hahn_gammas(const DualHahnParams& p, const Rational& alpha) {
    const Rational h(1, 2);
    StructureConstants g;
    g.d1 = alpha * (1 - alpha);
    g.d2 = 1 - 2 * alpha;
    g.d3 = p.rho2;
    g.d4 = alpha * (2 * p.rho2 * p.rho2 - p.rho2 + h) + p.rho2 * (1 - p.r2 - p.r1) + p.r1 * p.r2 - Rational(1, 4);
    g.d5 = (2 * alpha * p.rho2 - alpha - p.r1 - p.r2 + 1) / 2;
    return g;
}

/// The relations of the limit algebra; [k1,k3] and [k3,k2] lose their quadratic symmetric terms.
template <class M, class S>
std::vector<NamedElement<M>> dual_hahn_relation_residuals(const Generators<M>& e, const StructureConstantsT<S>& c) {
    const S two(2);
    const M& K1 = e.K1;
    const M& K2 = e.K2;
    const M& K3 = e.K3;
    const M& P = e.P;
    std::vector<NamedElement<M>> out;
    out.push_back({"[K1,P]=0", K1 * P - P * K1});
    out.push_back({"{K2,P}=2g3", K2 * P + P * K2 - (two * c.d3) * e.I});
    out.push_back({"{K3,P}=0", K3 * P + P * K3});
    out.push_back({"[K1,K2]=K3", K1 * K2 - K2 * K1 - K3});
    M rhs13 = c.d1 * K2 - (c.d1 * c.d3) * P - c.d2 * (K3 * P);
    out.push_back({"[K1,K3]", K1 * K3 - K3 * K1 - rhs13});
    M rhs32 = c.d2 * (K2 * K2 * P) + (two * c.d3) * (K1 * P) + (two * c.d3) * (K3 * P) + K1 + c.d4 * P + c.d5 * e.I;
    out.push_back({"[K3,K2]", K3 * K2 - K2 * K3 - rhs32});
    out.push_back({"P^2=I", P * P - e.I});
    return out;
}

struct DualHahnAlgebraReport {
    StructureConstants gammas;
    RelationReport relations;

    bool passed() const { return relations.action_passed(); }
};

inline DualHahnAlgebraReport dual_hahn_algebra_check(const DualHahnParams& p, const Rational& alpha,
                                                     unsigned max_degree = default_monomial_cap) {
    const ShiftReflectOp E = build_E_alpha(p, alpha);
    const ShiftReflectOp K2 = build_K2();
    const ShiftReflectOp P = build_P(ParamSet{Rational(0), p.rho2, p.r1, p.r2});
    const Generators<ShiftReflectOp> ops{E, K2, commutator(E, K2), P, ShiftReflectOp::identity()};
    DualHahnAlgebraReport rep{dual_hahn_gammas(p, alpha), {}};
    rep.relations = check_relations_with(
        ops, [&](const auto& g) { return dual_hahn_relation_residuals(g, rep.gammas); }, max_degree);
    return rep;
}

}  // namespace cbi
