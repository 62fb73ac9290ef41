#pragma once

/**
 * @file eigen.hpp
 * @brief Exact eigenvalue checks for D_a, U and H.
 */

#include "cbi/operators/grid.hpp"

namespace cbi {

namespace detail {

inline void record_residual(EigenReport& rep, long n, const Poly& residual) {
    if (!residual.is_zero()) rep.failures.push_back({n, std::nullopt, residual.str()});
}

}  // namespace detail

/// D_a I_n - Lambda_n^(a) I_n for n = 0..n_max.
inline EigenReport verify_eigen(const ParamSet& p, const Rational& alpha, unsigned n_max) {
    EigenReport rep{"eigen", p, alpha, static_cast<long>(n_max), {}};
    const ShiftReflectOp D = build_D_alpha(p, alpha);
    const auto I = cbi_table(p, n_max);
    for (unsigned n = 0; n <= n_max; ++n) {
        Poly res = D.apply(I[n]) - I[n] * eigenvalue_lambda(p, alpha, static_cast<long>(n));
        detail::record_residual(rep, static_cast<long>(n), res);
    }
    return rep;
}

/// U I_n - (n mod 2) I_n.
inline EigenReport verify_hidden(const ParamSet& p, unsigned n_max) {
    EigenReport rep{"hidden", p, Rational(0), static_cast<long>(n_max), {}};
    const ShiftReflectOp U = build_U(p);
    const auto I = cbi_table(p, n_max);
    for (unsigned n = 0; n <= n_max; ++n) {
        Poly res = U.apply(I[n]) - I[n] * Rational(static_cast<long>(n % 2));
        detail::record_residual(rep, static_cast<long>(n), res);
    }
    return rep;
}

/// H I_n(y - 1/4) - kappa_n I_n(y - 1/4).
inline EigenReport verify_h_spectrum(const ParamSet& p, unsigned n_max) {
    EigenReport rep{"h-spectrum", p, kappa_offset(p), static_cast<long>(n_max), {}};
    const ShiftReflectOp H = build_H_y(p);
    const auto I = cbi_table(p, n_max);
    for (unsigned n = 0; n <= n_max; ++n) {
        Poly f = affine_substitute(I[n], 1, Rational(-1, 4));
        Poly res = H.apply(f) - f * eigenvalue_kappa(p, static_cast<long>(n));
        detail::record_residual(rep, static_cast<long>(n), res);
    }
    return rep;
}

/// T^{1/4} H T^{-1/4} - D_{g^2+2g+5/4}, as a normal form (zero iff the operators coincide).
inline ShiftReflectOp h_conjugation_defect(const ParamSet& p) {
    ShiftReflectOp conj = ShiftReflectOp::shift(Rational(1, 4)) * build_H_y(p) * ShiftReflectOp::shift(Rational(-1, 4));
    return conj - build_D_alpha(p, kappa_offset(p));
}

}  // namespace cbi
