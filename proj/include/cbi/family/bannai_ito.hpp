#pragma once

/**
 * @file bannai_ito.hpp
 * @brief Monic Bannai-Ito polynomials B_n and their recurrence coefficients.
 *
 * B_{n+1} + (rho1 - A_n - C_n) B_n + A_{n-1} C_n B_{n-1} = x B_n,
 * B_{-1} = 0, B_0 = 1.
 */

#include <string>
#include <vector>

#include "cbi/family/params.hpp"

namespace cbi {

template <class F>
struct BiCoefficients {
    F A;
    F C;
};

/// Parity-split closed forms of A_n and C_n.
template <class F>
BiCoefficients<F> bi_coefficients(const ParamsT<F>& p, long n) {
    using detail::integer;
    const F nn = integer<F>(n);
    const F g = p.g();
    const F two = integer<F>(2);
    const F one = integer<F>(1);
    const std::string tag = "n=" + std::to_string(n);
    F a_num;
    F c_num;
    if (n % 2 == 0) {
        a_num = (nn + two * p.rho1 - two * p.r1 + one) * (nn + two * p.rho1 - two * p.r2 + one);
        c_num = -(nn * (nn - two * p.r1 - two * p.r2));
    } else {
        a_num = (nn + two * g + one) * (nn + two * p.rho1 + two * p.rho2 + one);
        c_num = -((nn + two * p.rho2 - two * p.r2) * (nn + two * p.rho2 - two * p.r1));
    }
    const F four = integer<F>(4);
    F A = detail::checked_div(a_num, four * (nn + g + one), "A_n denominator 4(n+g+1) vanishes at " + tag);
    F C = detail::checked_div(c_num, four * (nn + g), "C_n denominator 4(n+g) vanishes at " + tag);
    return {A, C};
}

/// B_0 .. B_n.
inline std::vector<Poly> bi_table(const ParamSet& p, unsigned n) {
    std::vector<Poly> out;
    out.reserve(n + 1);
    out.emplace_back(1);
    Poly prev;  // B_{-1}
    for (unsigned k = 0; k < n; ++k) {
        auto [Ak, Ck] = bi_coefficients(p, k);
        Rational u = k == 0 ? Rational(0) : bi_coefficients(p, static_cast<long>(k) - 1).A * Ck;
        Poly next = Poly::linear(1, -(p.rho1 - Ak - Ck)) * out.back() - prev * u;
        prev = out.back();
        out.push_back(std::move(next));
    }
    return out;
}

inline Poly bi_polynomial(const ParamSet& p, unsigned n) { return bi_table(p, n).back(); }

/// B_{n+1}(rho1) / B_n(rho1); equals A_n when the kernel transform is defined.
inline Rational kernel_ratio(const ParamSet& p, unsigned n) {
    auto table = bi_table(p, n + 1);
    Rational below = table[n](p.rho1);
    if (below.is_zero()) {
        throw KernelDegenerate("B_n(rho1) = 0 at n=" + std::to_string(n) + "; Christoffel transform undefined");
    }
    return table[n + 1](p.rho1) / below;
}

}  // namespace cbi
