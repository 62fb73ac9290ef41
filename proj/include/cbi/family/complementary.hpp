#pragma once

/**
 * @file complementary.hpp
 * @brief Complementary Bannai-Ito polynomials I_n.
 *
 * Three routes to the same monic family:
 *   - the recurrence I_{n+1} = (x - (-1)^n rho2) I_n - tau_n I_{n-1}, I_0 = 1, I_1 = x - rho2;
 *   - the Christoffel (kernel) transform of B_n at rho1;
 *   - the 4F3 closed forms I_{2m} = R_m(x^2), I_{2m+1} = (x - rho2) Q_m(x^2).
 * Geronimus reconstruction B_n = I_n - C_n I_{n-1} goes back the other way.
 */

#include <array>
#include <string>
#include <vector>

#include "cbi/core/hypergeometric.hpp"
#include "cbi/family/bannai_ito.hpp"

namespace cbi {

enum class Family { BannaiIto, Complementary };

/// Monic polynomials of degree 0..n for one parameter set.
struct PolyTable {
    Family family = Family::Complementary;
    ParamSet params;
    std::vector<Poly> polys;
};

/// Parity-split closed form of tau_n.
template <class F>
F cbi_tau(const ParamsT<F>& p, long n) {
    using detail::constant;
    using detail::integer;
    const F g = p.g();
    const F half = constant<F>(1, 2);
    const F one = integer<F>(1);
    const F two = integer<F>(2);
    const long m = n / 2;
    const F mm = integer<F>(m);
    const std::string tag = "tau_" + std::to_string(n);
    if (n % 2 == 0) {
        F num = mm * (mm + p.rho1 - p.r1 + half) * (mm + p.rho1 - p.r2 + half) * (mm - p.r1 - p.r2);
        F den = (two * mm + g) * (two * mm + g + one);
        return -detail::checked_div(num, den, tag + " denominator (2m+g)(2m+g+1) vanishes");
    }
    F num = (mm + g + one) * (mm + p.rho1 + p.rho2 + one) * (mm + p.rho2 - p.r1 + half) * (mm + p.rho2 - p.r2 + half);
    F den = (two * mm + g + one) * (two * mm + g + two);
    return -detail::checked_div(num, den, tag + " denominator (2m+g+1)(2m+g+2) vanishes");
}

/// I_0 .. I_n from the recurrence.
inline std::vector<Poly> cbi_table(const ParamSet& p, unsigned n) {
    std::vector<Poly> out;
    out.reserve(n + 1);
    out.emplace_back(1);
    if (n == 0) return out;
    out.push_back(Poly::linear(1, -p.rho2));
    for (unsigned k = 1; k < n; ++k) {
        Rational diag = parity_sign(k) * p.rho2;
        Poly next = Poly::linear(1, -diag) * out[k] - out[k - 1] * cbi_tau(p, k);
        out.push_back(std::move(next));
    }
    return out;
}

inline Poly cbi_polynomial(const ParamSet& p, unsigned n) { return cbi_table(p, n).back(); }

inline PolyTable make_table(Family family, const ParamSet& p, unsigned n) {
    return {family, p, family == Family::BannaiIto ? bi_table(p, n) : cbi_table(p, n)};
}

/// (B_{n+1} - A_n B_n) / (x - rho1), which must divide exactly.
inline Poly christoffel_transform(const ParamSet& p, unsigned n) {
    auto b = bi_table(p, n + 1);
    Poly top = b[n + 1] - b[n] * bi_coefficients(p, n).A;
    auto [q, rem] = divmod(top, Poly::linear(1, -p.rho1));
    if (!rem.is_zero()) {
        throw InternalInconsistency("Christoffel numerator not divisible by (x - rho1) at n=" + std::to_string(n) +
                                    ", remainder " + rem.str());
    }
    return q;
}

/// I_n - C_n I_{n-1}; reproduces B_n.
inline Poly geronimus_reconstruct(const ParamSet& p, unsigned n) {
    auto I = cbi_table(p, n);
    if (n == 0) return I[0];
    return I[n] - I[n - 1] * bi_coefficients(p, n).C;
}

namespace detail {

/// eta_m (even) or iota_m (odd) normalization and the 4F3 parameters for R_m / Q_m.
struct CbiHypergeometricData {
    Rational prefactor;
    Rational second_numerator;  // m+g+1 or m+g+2
    Rational shift;             // rho2 or rho2+1; numerators (shift+x), (shift-x)
    std::array<Rational, 3> denominators;
};

inline CbiHypergeometricData cbi_hypergeometric_data(const ParamSet& p, unsigned m, bool odd) {
    const Rational g = p.g();
    const Rational o = odd ? Rational(1) : Rational(0);
    const Rational mm(static_cast<long>(m));
    std::array<Rational, 3> dens = {p.rho1 + p.rho2 + 1 + o, p.rho2 - p.r1 + Rational(1, 2) + o,
                                    p.rho2 - p.r2 + Rational(1, 2) + o};
    Rational second = mm + g + 1 + o;
    Rational norm_den = pochhammer(second, m);
    if (norm_den.is_zero()) {
        throw SingularParameter(std::string(odd ? "iota_" : "eta_") + std::to_string(m) +
                                " normalization (m+g+" + (odd ? "2" : "1") + ")_m vanishes");
    }
    Rational pre = pochhammer(dens[0], m) * pochhammer(dens[1], m) * pochhammer(dens[2], m) / norm_den;
    return {pre, second, p.rho2 + o, dens};
}

}  // namespace detail

/// R_m(z) for odd == false, Q_m(z) for odd == true, as polynomials in x (even in x).
inline Poly cbi_closed_form_part(const ParamSet& p, unsigned m, bool odd) {
    auto d = detail::cbi_hypergeometric_data(p, m, odd);
    std::array<Poly, 3> nums = {Poly(d.second_numerator), Poly::linear(1, d.shift), Poly::linear(-1, d.shift)};
    return pfq_polynomial(m, nums, d.denominators, Rational(1)) * d.prefactor;
}

/// I_n from the 4F3 closed forms, expanded symbolically in x.
inline Poly cbi_closed_form(const ParamSet& p, unsigned n) {
    if (n % 2 == 0) return cbi_closed_form_part(p, n / 2, false);
    return Poly::linear(1, -p.rho2) * cbi_closed_form_part(p, n / 2, true);
}

}  // namespace cbi
